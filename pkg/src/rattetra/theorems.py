"""Exact per-instance checks of the circumquadrance/dihedral-spread identities.

With ``P = A012 A013 A023 A123`` the product of the face quadreas:

* ``P^2 M == 1024 V^5 R``      (spread form of the circumquadrance)
* ``P^2 M == 256 V^4 N``
* ``E01 E23 / (Q01 Q23) == E02 E13 / (Q02 Q13) == E03 E12 / (Q03 Q12) == K``
  (checked cross-multiplied)
* ``M == K^2 N`` and ``R == M / (4 V K^2)``

where ``M = A(E01 E23, E02 E13, E03 E12)``, ``N = A(Q01 Q23, Q02 Q13, Q03 Q12)``
and ``K = 16 V^2 / P`` is the Richardson number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from . import _matrix
from .affine import map_to_standard
from .circum import circumcentre, midplane_residuals, n_value, standard_circumcentre
from .errors import DegenerateTetrahedron, MissingSpread, NullTriangle
from .field import Scalar
from .tetra import OPPOSITE_PAIRS, TRIANGLES, MetricReport, Tetrahedron, archimedes, metric_report

__all__ = [
    "Identity",
    "VerifyReport",
    "m_via_determinant",
    "m_via_archimedes",
    "n_value",
    "richardson_number",
    "circumquadrance_from_spreads",
    "opposite_ratios",
    "verify_all",
]

Spreads = Mapping[Tuple[int, int], Optional[Scalar]]


def _require(E: Spreads) -> None:
    missing = [e for e in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)) if E.get(e) is None]
    if missing:
        raise MissingSpread("missing dihedral spreads at " + ", ".join(f"{i}{j}" for i, j in missing))


def m_via_determinant(E: Spreads) -> Scalar:
    """Minus the determinant of the zero-diagonal symmetric 4x4 matrix of spreads."""
    _require(E)
    zero = E[0, 1] - E[0, 1]
    m = [[zero] * 4 for _ in range(4)]
    for (i, j), e in E.items():
        m[i][j] = m[j][i] = e
    return -_matrix.det_leibniz(m)


def m_via_archimedes(E: Spreads) -> Scalar:
    _require(E)
    return archimedes(*(E[x] * E[y] for x, y in OPPOSITE_PAIRS))


def _quadrea_product(rep: MetricReport) -> Scalar:
    P = rep.A[TRIANGLES[0]]
    for t in TRIANGLES[1:]:
        P = P * rep.A[t]
    return P


def _require_faces(rep: MetricReport) -> None:
    null = [t for t in TRIANGLES if rep.A[t] == 0]
    if null:
        raise NullTriangle("zero quadrea on triangle(s) " + ", ".join("".join(map(str, t)) for t in null))


def richardson_number(T: Tetrahedron) -> Scalar:
    rep = metric_report(T)
    _require_faces(rep)
    return 16 * rep.V * rep.V / _quadrea_product(rep)


def circumquadrance_from_spreads(T: Tetrahedron) -> Scalar:
    """``R = M / (4 V K^2)``, computed from spreads and quadreas alone."""
    rep = metric_report(T)
    if rep.V == 0:
        raise DegenerateTetrahedron("quadrume is zero")
    _require_faces(rep)
    K = 16 * rep.V * rep.V / _quadrea_product(rep)
    return m_via_archimedes(rep.E) / (4 * rep.V * K * K)


def opposite_ratios(rep: MetricReport) -> Tuple[Optional[Scalar], ...]:
    """``E_x E_y / (Q_x Q_y)`` for each opposite edge pair; ``None`` where undefined."""
    _require(rep.E)
    Q, E = rep.Q, rep.E
    return tuple(E[x] * E[y] / (Q[x] * Q[y]) if Q[x] * Q[y] != 0 else None for x, y in OPPOSITE_PAIRS)


@dataclass(frozen=True)
class Identity:
    """One checked identity; ``lhs`` and ``rhs`` are scalars or tuples of scalars."""

    name: str
    lhs: Any
    rhs: Any

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class VerifyReport:
    identities: List[Identity]
    M: Scalar
    N: Scalar
    K: Scalar
    R: Scalar

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.identities)

    def by_name(self) -> Dict[str, Identity]:
        return {i.name: i for i in self.identities}


def verify_all(T: Tetrahedron) -> VerifyReport:
    rep = metric_report(T)
    if rep.V == 0:
        raise DegenerateTetrahedron("quadrume is zero")
    _require_faces(rep)

    _, B = map_to_standard(T)
    std = Tetrahedron.standard(B)
    residuals = midplane_residuals(std, standard_circumcentre(B))
    R = circumcentre(T).circumquadrance

    V, Q, E = rep.V, rep.Q, rep.E
    P = _quadrea_product(rep)
    M = m_via_archimedes(E)
    N = n_value(Q)
    K = 16 * V * V / P
    spread_products = tuple(E[x] * E[y] for x, y in OPPOSITE_PAIRS)
    scaled_quadrance_products = tuple(K * Q[x] * Q[y] for x, y in OPPOSITE_PAIRS)
    P2M = P * P * M

    identities = [
        Identity("circumcentre on all six midplanes", residuals, tuple(V - V for _ in residuals)),
        Identity("4 V R = N", 4 * V * R, N),
        Identity("P^2 M = 1024 V^5 R", P2M, 1024 * V**5 * R),
        Identity("P^2 M = 256 V^4 N", P2M, 256 * V**4 * N),
        # cross-multiplied so that a null edge (Q = 0) does not leave 0/0
        Identity("E E = K Q Q on opposite edges", spread_products, scaled_quadrance_products),
        Identity("M by determinant = M by Archimedes", m_via_determinant(E), M),
        Identity("M = K^2 N", M, K * K * N),
    ]
    return VerifyReport(identities, M, N, K, R)
