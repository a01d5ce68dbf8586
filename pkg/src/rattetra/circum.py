"""Midplanes, the circumcentre and the circumquadrance under a form B."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .affine import map_to_standard
from .errors import DegenerateTetrahedron, InternalConcurrencyFailure
from .field import Scalar
from .form import SymForm, Vector3
from .tetra import EDGES, Point3, Tetrahedron, archimedes, edge_vector, metric_report, midpoint


@dataclass(frozen=True)
class Plane:
    """Points ``X`` with ``normal . B . (X - through) == 0``."""

    normal: Vector3
    through: Point3

    def residual(self, X: Point3, B: SymForm) -> Scalar:
        return B.dot(self.normal, X - self.through)

    def contains(self, X: Point3, B: SymForm) -> bool:
        return self.residual(X, B) == 0

    def equation(self, B: SymForm) -> Tuple[Tuple[Scalar, Scalar, Scalar], Scalar]:
        """Coefficients ``(c, d)`` of the linear equation ``c . [x,y,z] = d``."""
        n = self.normal
        coeffs = (
            B.dot(n, Vector3(B.spec.one, B.spec.zero, B.spec.zero)),
            B.dot(n, Vector3(B.spec.zero, B.spec.one, B.spec.zero)),
            B.dot(n, Vector3(B.spec.zero, B.spec.zero, B.spec.one)),
        )
        origin = Point3(B.spec.zero, B.spec.zero, B.spec.zero)
        return coeffs, B.dot(n, self.through - origin)


@dataclass(frozen=True)
class CircumResult:
    centre: Point3
    circumquadrance: Scalar


def midplane(T: Tetrahedron, i: int, j: int) -> Plane:
    return Plane(edge_vector(T, i, j), midpoint(T, i, j))


def midplane_residuals(T: Tetrahedron, X: Point3) -> Tuple[Scalar, ...]:
    """How far ``X`` is from each of the six midplanes, in edge order."""
    return tuple(midplane(T, *e).residual(X, T.form) for e in EDGES)


def standard_circumcentre(B: SymForm) -> Point3:
    """Solution of the three midplane equations through ``X0`` for the Standard tetrahedron."""
    a1, a2, a3 = B.a1, B.a2, B.a3
    (al1, al2, al3), (be1, be2, be3) = B.alpha, B.beta
    two_delta = 2 * B.delta
    return Point3(
        (al1 * a1 + be3 * a2 + be2 * a3) / two_delta,
        (be3 * a1 + al2 * a2 + be1 * a3) / two_delta,
        (be2 * a1 + be1 * a2 + al3 * a3) / two_delta,
    )


def circumcentre(T: Tetrahedron) -> CircumResult:
    phi, B = map_to_standard(T)
    std = Tetrahedron.standard(B)
    centre_std = standard_circumcentre(B)
    residuals = midplane_residuals(std, centre_std)
    if any(r != 0 for r in residuals):
        raise InternalConcurrencyFailure(
            "closed-form centre misses a midplane; residuals " + ", ".join(map(str, residuals))
        )
    centre = phi.pull_back(centre_std)
    return CircumResult(centre, T.form.quad(centre - T.points[0]))


def crelle_circumquadrance(T: Tetrahedron) -> Scalar:
    """``A(Q01 Q23, Q02 Q13, Q03 Q12) / (4 V)``."""
    rep = metric_report(T)
    if rep.V == 0:
        raise DegenerateTetrahedron("quadrume is zero")
    return n_value(rep.Q) / (4 * rep.V)


def n_value(Q) -> Scalar:
    """Archimedes' function of the three opposite-edge quadrance products."""
    return archimedes(Q[0, 1] * Q[2, 3], Q[0, 2] * Q[1, 3], Q[0, 3] * Q[1, 2])


def standard_circumquadrance(B: SymForm) -> Scalar:
    """Circumquadrance of the Standard tetrahedron, ``A(a1 r1, a2 r2, a3 r3) / (16 delta)``."""
    r1, r2, r3 = B.r
    return archimedes(B.a1 * r1, B.a2 * r2, B.a3 * r3) / (16 * B.delta)


def standard_circumquadrance_expanded(B: SymForm) -> Scalar:
    """``(A(a1 b1, a2 b2, a3 b3) + a1 a2 a3 (a1+a2+a3 - 2(b1+b2+b3))) / (4 delta)``.

    Algebraically equal to :func:`standard_circumquadrance`.
    """
    a1, a2, a3, b1, b2, b3 = B.a1, B.a2, B.a3, B.b1, B.b2, B.b3
    top = archimedes(a1 * b1, a2 * b2, a3 * b3) + a1 * a2 * a3 * (a1 + a2 + a3 - 2 * (b1 + b2 + b3))
    return top / (4 * B.delta)


def standard_circumquadrance_adjugate_variant(B: SymForm) -> Scalar:
    """``(A(a1 b1, a2 b2, a3 b3) + a1 a2 a3 (D - 4(b1+b2+b3))) / (4 delta)``.

    Not a valid circumquadrance formula.  It agrees with the true value only
    on a thin set of forms (the identity among them) and is kept so the
    discrepancy can be checked.
    """
    a1, a2, a3, b1, b2, b3 = B.a1, B.a2, B.a3, B.b1, B.b2, B.b3
    top = archimedes(a1 * b1, a2 * b2, a3 * b3) + a1 * a2 * a3 * (B.D - 4 * (b1 + b2 + b3))
    return top / (4 * B.delta)
