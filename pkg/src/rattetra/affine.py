"""Reduction of an arbitrary tetrahedron to the Standard tetrahedron.

The Standard tetrahedron has vertices ``[0,0,0], [1,0,0], [0,1,0], [0,0,1]``.
For a tetrahedron ``A0..A3`` under form ``C``, the affine map

    phi(P) = (P - A0) L

with ``L`` the inverse of the matrix ``M`` whose rows are ``A1-A0, A2-A0,
A3-A0`` sends ``A_i`` to ``X_i``.  Transporting the metric gives the induced
form ``B = M C M^T``, so that ``u.C.v == (uL).B.(vL)`` for all vectors.

Every quantity of the Standard tetrahedron under ``B`` has a closed form in
the entries of ``B``; :func:`standard_report` evaluates them directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import _matrix
from .errors import DegenerateTetrahedron
from .form import Matrix3, SymForm, Vector3
from .tetra import EDGES, MetricReport, Point3, Tetrahedron


@dataclass(frozen=True)
class AffineMap:
    """``P -> P @ linear + translation`` with the inverse linear part cached."""

    linear: Matrix3
    translation: Vector3
    inverse_linear: Matrix3

    def apply(self, P: Point3) -> Point3:
        x, y, z = _matrix.vecmat(tuple(P), self.linear)
        t = self.translation
        return Point3(x + t.x, y + t.y, z + t.z)

    def apply_vector(self, v: Vector3) -> Vector3:
        return Vector3(*_matrix.vecmat(tuple(v), self.linear))

    def pull_back(self, P: Point3) -> Point3:
        t = self.translation
        x, y, z = _matrix.vecmat((P.x - t.x, P.y - t.y, P.z - t.z), self.inverse_linear)
        return Point3(x, y, z)


def map_to_standard(T: Tetrahedron) -> Tuple[AffineMap, SymForm]:
    A0 = T.points[0]
    edges = tuple(tuple(T.points[i] - A0) for i in (1, 2, 3))
    if _matrix.det3(edges) == 0:
        raise DegenerateTetrahedron("edge vectors A0A1, A0A2, A0A3 are linearly dependent")
    linear = _matrix.inverse3(edges)
    shift = _matrix.vecmat(tuple(A0), linear)
    phi = AffineMap(linear, Vector3(*(-c for c in shift)), edges)
    return phi, T.form.transformed(edges)


def pull_back_point(phi: AffineMap, P: Point3) -> Point3:
    return phi.pull_back(P)


def standard_report(B: SymForm) -> MetricReport:
    """Invariants of the Standard tetrahedron under ``B`` from their closed forms."""
    a1, a2, a3 = B.a1, B.a2, B.a3
    (al1, al2, al3), (r1, r2, r3) = B.alpha, B.r
    delta, D = B.delta, B.D
    Q = {(0, 1): a1, (0, 2): a2, (0, 3): a3, (1, 2): r3, (1, 3): r2, (2, 3): r1}
    A = {(0, 1, 2): 4 * al3, (0, 1, 3): 4 * al2, (0, 2, 3): 4 * al1, (1, 2, 3): 4 * D}

    def ratio(num, *den):
        prod = den[0]
        for d in den[1:]:
            prod = prod * d
        return None if prod == 0 else num * delta / prod

    E = {
        (0, 1): ratio(a1, al2, al3),
        (0, 2): ratio(a2, al1, al3),
        (0, 3): ratio(a3, al1, al2),
        (2, 3): ratio(r1, al1, D),
        (1, 3): ratio(r2, al2, D),
        (1, 2): ratio(r3, al3, D),
    }
    return MetricReport(Q, A, 4 * delta, {e: E[e] for e in EDGES})


def invariants_via_standard(T: Tetrahedron) -> MetricReport:
    _, B = map_to_standard(T)
    return standard_report(B)
