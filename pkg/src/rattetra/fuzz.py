"""Seeded random instances and the per-instance consistency suite.

Trial ``i`` of a run with seed ``s`` draws from ``random.Random(s + i)``, so
any trial can be replayed on its own and the output of a run depends only
on its arguments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from .affine import invariants_via_standard, map_to_standard
from .circum import (
    circumcentre,
    crelle_circumquadrance,
    standard_circumquadrance,
    standard_circumquadrance_expanded,
)
from .errors import DegenerateForm, RatTetraError
from .field import FieldSpec, Scalar
from .form import SymForm
from .tetra import TRIANGLES, Point3, Tetrahedron, metric_report
from .theorems import circumquadrance_from_spreads, verify_all

RETRY_CAP = 100


def random_scalar(rng: random.Random, spec: FieldSpec, coord_bound: int, denom_bound: int) -> Scalar:
    num = rng.randint(-coord_bound, coord_bound)
    while True:
        den = rng.randint(1, denom_bound)
        if spec.is_rational or den % spec.p:
            break
    return spec(num) / den


def random_form(rng, spec, coord_bound, denom_bound) -> Optional[SymForm]:
    entries = [random_scalar(rng, spec, coord_bound, denom_bound) for _ in range(6)]
    try:
        return SymForm(*entries)
    except DegenerateForm:
        return None


def random_positive_definite_form(rng: random.Random, coord_bound: int = 3, denom_bound: int = 3) -> SymForm:
    """``G G^T`` for a random rational lower-triangular ``G`` with nonzero diagonal."""
    spec = FieldSpec.rational()
    G = [[spec.zero] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i + 1):
            x = random_scalar(rng, spec, coord_bound, denom_bound)
            while i == j and x == 0:
                x = random_scalar(rng, spec, coord_bound, denom_bound)
            G[i][j] = x
    return SymForm.identity(spec).transformed(tuple(map(tuple, G)))


def random_points(rng, spec, coord_bound, denom_bound) -> Tuple[Point3, ...]:
    return tuple(
        Point3(*(random_scalar(rng, spec, coord_bound, denom_bound) for _ in range(3))) for _ in range(4)
    )


def usable(T: Tetrahedron) -> bool:
    rep = metric_report(T)
    return rep.V != 0 and all(rep.A[t] != 0 for t in TRIANGLES)


def random_tetrahedron(
    rng: random.Random,
    spec: FieldSpec,
    coord_bound: int = 5,
    denom_bound: int = 5,
    form: Optional[SymForm] = None,
) -> Optional[Tetrahedron]:
    """A nondegenerate tetrahedron with no null face, or ``None`` after ``RETRY_CAP`` draws."""
    for _ in range(RETRY_CAP):
        B = form if form is not None else random_form(rng, spec, coord_bound, denom_bound)
        if B is None:
            continue
        T = Tetrahedron(random_points(rng, spec, coord_bound, denom_bound), B)
        if usable(T):
            return T
    return None


def corpus(
    spec: FieldSpec, count: int, seed: int, coord_bound: int = 5, denom_bound: int = 5
) -> Iterator[Tuple[int, Optional[Tetrahedron]]]:
    for i in range(count):
        yield i, random_tetrahedron(random.Random(seed + i), spec, coord_bound, denom_bound)


@dataclass
class Failure:
    trial: int
    check: str
    lhs: str
    rhs: str
    instance: Tetrahedron


def check_instance(T: Tetrahedron) -> List[Tuple[str, str, str]]:
    """Run every consistency check; returns ``(check, lhs, rhs)`` for each mismatch."""
    bad = []
    try:
        report = verify_all(T)
        for ident in report.identities:
            if not ident.passed:
                bad.append((ident.name, _show(ident.lhs), _show(ident.rhs)))
        R = report.R
        pairs = [
            ("Crelle R = circumcentre R", crelle_circumquadrance(T), R),
            ("R = M / (4 V K^2)", circumquadrance_from_spreads(T), R),
        ]
        _, B = map_to_standard(T)
        pairs.append(("standard closed-form R = R", standard_circumquadrance(B), R))
        pairs.append(("standard expanded R = R", standard_circumquadrance_expanded(B), R))
        centre = circumcentre(T).centre
        quads = tuple(T.form.quad(centre - P) for P in T.points)
        pairs.append(("equal circumquadrance from all vertices", quads, (R,) * 4))
        for name, lhs, rhs in pairs:
            if lhs != rhs:
                bad.append((name, _show(lhs), _show(rhs)))
        direct, via = metric_report(T), invariants_via_standard(T)
        if direct != via:
            bad.append(("direct report = report via Standard tetrahedron", repr(direct), repr(via)))
    except RatTetraError as exc:
        bad.append((type(exc).__name__, str(exc), ""))
    return bad


def _show(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_show(v) for v in x) + ")"
    return str(x)


@dataclass
class FuzzSummary:
    spec: FieldSpec
    count: int
    seed: int
    coord_bound: int
    denom_bound: int
    trials: int = 0
    skipped: int = 0
    failures: List[Failure] = field(default_factory=list)


def run(spec: FieldSpec, count: int, seed: int, coord_bound: int = 5, denom_bound: int = 5) -> FuzzSummary:
    if count < 1 or coord_bound < 1 or denom_bound < 1:
        raise ValueError("count and bounds must be at least 1")
    summary = FuzzSummary(spec, count, seed, coord_bound, denom_bound)
    for i, T in corpus(spec, count, seed, coord_bound, denom_bound):
        if T is None:
            summary.skipped += 1
            continue
        summary.trials += 1
        for check, lhs, rhs in check_instance(T):
            summary.failures.append(Failure(i, check, lhs, rhs, T))
    return summary
