"""Floating-point Euclidean crosscheck of the exact invariants.

For a rational, positive-definite form ``B = G G^T`` the map ``P -> P G``
is an isometry onto ordinary Euclidean space, where

    quadrance      = distance^2
    quadrea        = 16 * area^2
    quadrume       = 144 * volume^2
    spread         = sin^2(dihedral angle)
    circumquadrance = circumradius^2

(constants fixed by the identity-form Standard tetrahedron: area 1/2 gives
quadrea 4, volume 1/6 gives quadrume 4).  Nothing here feeds back into the
exact computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .circum import circumcentre
from .errors import DegenerateTetrahedron, NotPositiveDefinite, UnsupportedField
from .form import SymForm
from .tetra import EDGES, TRIANGLES, Tetrahedron, metric_report

TOLERANCE = 1e-9


def is_positive_definite(B: SymForm) -> bool:
    """Sylvester's criterion on the leading minors ``a1``, ``alpha3``, ``delta``."""
    if not B.spec.is_rational:
        raise UnsupportedField("positive definiteness needs an ordered field")
    return B.a1 > 0 and B.alpha[2] > 0 and B.delta > 0


@dataclass
class Comparison:
    quantity: str
    exact: float
    classical: float

    @property
    def deviation(self) -> float:
        """Relative difference, or absolute when the exact value is zero."""
        diff = abs(self.exact - self.classical)
        return diff / abs(self.exact) if self.exact != 0 else diff

    @property
    def passed(self) -> bool:
        return self.deviation < TOLERANCE


@dataclass
class EuclideanOracleReport:
    comparisons: List[Comparison] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max(c.deviation for c in self.comparisons)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons)


def _spread_from_normals(n1: np.ndarray, n2: np.ndarray) -> float:
    # |n1 x n2|^2 / (|n1|^2 |n2|^2) keeps relative accuracy for small angles,
    # unlike 1 - cos^2.
    c = np.cross(n1, n2)
    return float(c @ c) / (float(n1 @ n1) * float(n2 @ n2))


def _circumradius_sq(P: np.ndarray) -> Tuple[float, np.ndarray]:
    lhs = 2.0 * (P[1:] - P[0])
    rhs = np.sum(P[1:] ** 2, axis=1) - np.sum(P[0] ** 2)
    c = np.linalg.solve(lhs, rhs)
    d = c - P[0]
    return float(d @ d), c


def euclidean_crosscheck(T: Tetrahedron) -> EuclideanOracleReport:
    B = T.form
    if not is_positive_definite(B):
        raise NotPositiveDefinite("form is not positive definite")
    rep = metric_report(T)
    if rep.V == 0:
        raise DegenerateTetrahedron("quadrume is zero")
    centre = circumcentre(T)

    G = np.linalg.cholesky(np.array([[float(x) for x in row] for row in B.matrix]))
    P = np.array([[float(c) for c in pt] for pt in T.points]) @ G

    out = EuclideanOracleReport()
    add = out.comparisons.append
    for i, j in EDGES:
        d = P[j] - P[i]
        add(Comparison(f"Q{i}{j} vs distance^2", float(rep.Q[i, j]), float(d @ d)))
    for i, j, k in TRIANGLES:
        n = np.cross(P[j] - P[i], P[k] - P[i])
        area_sq = float(n @ n) / 4.0
        add(Comparison(f"A{i}{j}{k} vs 16 area^2", float(rep.A[i, j, k]), 16.0 * area_sq))
    vol = float(np.dot(P[1] - P[0], np.cross(P[2] - P[0], P[3] - P[0]))) / 6.0
    add(Comparison("V vs 144 volume^2", float(rep.V), 144.0 * vol * vol))
    for i, j in EDGES:
        if rep.E[i, j] is None:
            continue
        k, l = (n for n in range(4) if n not in (i, j))
        axis = P[j] - P[i]
        n1 = np.cross(axis, P[k] - P[i])
        n2 = np.cross(axis, P[l] - P[i])
        add(Comparison(f"E{i}{j} vs sin^2 dihedral", float(rep.E[i, j]), _spread_from_normals(n1, n2)))
    r_sq, _ = _circumradius_sq(P)
    add(Comparison("R vs circumradius^2", float(centre.circumquadrance), r_sq))
    return out
