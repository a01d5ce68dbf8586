"""Tetrahedra and their rational metric invariants under a form B.

Edges are indexed by sorted pairs ``(i, j)`` with ``0 <= i < j <= 3`` and
triangles by sorted triples, so ``E[(0, 1)]`` is the dihedral spread at the
edge ``A0A1``.  All quantities are exact field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, Optional, Tuple

from .errors import BadIndex, FieldMismatch, NullTriangle
from .field import FieldSpec, Scalar, common_spec
from .form import SymForm, Vector3

EDGES: Tuple[Tuple[int, int], ...] = tuple(combinations(range(4), 2))
TRIANGLES: Tuple[Tuple[int, int, int], ...] = tuple(combinations(range(4), 3))
# Pairs of opposite edges, in the order (01|23), (02|13), (03|12).
OPPOSITE_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True)
class Point3:
    x: Scalar
    y: Scalar
    z: Scalar

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.x, self.y, self.z))

    def __sub__(self, other: "Point3") -> Vector3:
        if not isinstance(other, Point3):
            return NotImplemented
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __add__(self, v: Vector3) -> "Point3":
        if not isinstance(v, Vector3):
            return NotImplemented
        return Point3(self.x + v.x, self.y + v.y, self.z + v.z)


def standard_points(spec: FieldSpec) -> Tuple[Point3, Point3, Point3, Point3]:
    o, i = spec.zero, spec.one
    return (Point3(o, o, o), Point3(i, o, o), Point3(o, i, o), Point3(o, o, i))


@dataclass(frozen=True)
class Tetrahedron:
    points: Tuple[Point3, Point3, Point3, Point3]
    form: SymForm

    def __post_init__(self):
        if len(self.points) != 4:
            raise ValueError("a tetrahedron has exactly four points")
        object.__setattr__(self, "points", tuple(self.points))
        coords = [c for P in self.points for c in P]
        if common_spec(coords) != self.form.spec:
            raise FieldMismatch("points and form live in different fields")

    @classmethod
    def standard(cls, form: SymForm) -> "Tetrahedron":
        return cls(standard_points(form.spec), form)

    @property
    def spec(self) -> FieldSpec:
        return self.form.spec


def _edge(i: int, j: int) -> None:
    if not (0 <= i < j <= 3):
        raise BadIndex(f"edge index ({i},{j}) must satisfy 0 <= i < j <= 3")


def _triangle(i: int, j: int, k: int) -> None:
    if not (0 <= i < j < k <= 3):
        raise BadIndex(f"triangle index ({i},{j},{k}) must satisfy 0 <= i < j < k <= 3")


def edge_vector(T: Tetrahedron, i: int, j: int) -> Vector3:
    _edge(i, j)
    return T.points[j] - T.points[i]


def midpoint(T: Tetrahedron, i: int, j: int) -> Point3:
    _edge(i, j)
    half = T.spec.one / 2
    return T.points[i] + edge_vector(T, i, j) * half


def quadrance(T: Tetrahedron, i: int, j: int) -> Scalar:
    return T.form.quad(edge_vector(T, i, j))


def archimedes(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    """Archimedes' function ``(a+b+c)^2 - 2(a^2+b^2+c^2)``."""
    common_spec((a, b, c))
    s = a + b + c
    return s * s - 2 * (a * a + b * b + c * c)


def quadrea(T: Tetrahedron, i: int, j: int, k: int) -> Scalar:
    _triangle(i, j, k)
    return archimedes(quadrance(T, i, j), quadrance(T, i, k), quadrance(T, j, k))


def euler_four_point(q1, q2, q3, p1, p2, p3) -> Scalar:
    """Euler's four-point function.

    ``p1, p2, p3`` are the quadrances from a base vertex to vertices 1, 2, 3
    and ``q_k`` is the quadrance of the edge joining the two of those
    vertices other than ``k``.  The value is the determinant

        | 2p1        p1+p2-q3   p1+p3-q2 |
        | p1+p2-q3   2p2        p2+p3-q1 |
        | p1+p3-q2   p2+p3-q1   2p3      |
    """
    common_spec((q1, q2, q3, p1, p2, p3))
    m12 = p1 + p2 - q3
    m13 = p1 + p3 - q2
    m23 = p2 + p3 - q1
    d1, d2, d3 = 2 * p1, 2 * p2, 2 * p3
    return d1 * (d2 * d3 - m23 * m23) - m12 * (m12 * d3 - m23 * m13) + m13 * (m12 * m23 - d2 * m13)


def _quadrances(T: Tetrahedron) -> Dict[Tuple[int, int], Scalar]:
    return {e: quadrance(T, *e) for e in EDGES}


def _quadrume(Q) -> Scalar:
    return euler_four_point(Q[2, 3], Q[1, 3], Q[1, 2], Q[0, 1], Q[0, 2], Q[0, 3]) / 2


def quadrume(T: Tetrahedron) -> Scalar:
    return _quadrume(_quadrances(T))


def _faces(i: int, j: int) -> Tuple[Tuple[int, int, int], Tuple[int, int, int]]:
    k, l = (n for n in range(4) if n not in (i, j))
    return tuple(sorted((i, j, k))), tuple(sorted((i, j, l)))


def _spread(Q, A, V, i, j) -> Optional[Scalar]:
    f1, f2 = _faces(i, j)
    if A[f1] == 0 or A[f2] == 0:
        return None
    return 4 * Q[i, j] * V / (A[f1] * A[f2])


def dihedral_spread(T: Tetrahedron, i: int, j: int) -> Scalar:
    """``4 Q_ij V / (A_ijk A_ijl)`` for the two faces meeting along edge ``ij``."""
    _edge(i, j)
    Q = _quadrances(T)
    f1, f2 = _faces(i, j)
    A = {f: archimedes(Q[f[0], f[1]], Q[f[0], f[2]], Q[f[1], f[2]]) for f in (f1, f2)}
    E = _spread(Q, A, _quadrume(Q), i, j)
    if E is None:
        null = f1 if A[f1] == 0 else f2
        raise NullTriangle(f"triangle {''.join(map(str, null))} has zero quadrea")
    return E


@dataclass(frozen=True)
class MetricReport:
    """Quadrances, quadreas, quadrume and dihedral spreads of one tetrahedron.

    ``E`` maps every edge to its spread, or to ``None`` when one of the two
    adjacent faces has zero quadrea.
    """

    Q: Dict[Tuple[int, int], Scalar]
    A: Dict[Tuple[int, int, int], Scalar]
    V: Scalar
    E: Dict[Tuple[int, int], Optional[Scalar]]

    @property
    def spreads_complete(self) -> bool:
        return all(e is not None for e in self.E.values())


def metric_report(T: Tetrahedron) -> MetricReport:
    Q = _quadrances(T)
    A = {t: archimedes(Q[t[0], t[1]], Q[t[0], t[2]], Q[t[1], t[2]]) for t in TRIANGLES}
    V = _quadrume(Q)
    E = {e: _spread(Q, A, V, *e) for e in EDGES}
    return MetricReport(Q, A, V, E)
