import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from rattetra.field import FieldSpec, PrimeElement
from rattetra.form import SymForm
from rattetra.fuzz import random_tetrahedron
from rattetra.tetra import Point3, Tetrahedron

ROOT = Path(__file__).resolve().parent.parent
INSTANCES = ROOT / "instances"

QQ = FieldSpec.rational()
F7 = FieldSpec.prime(7)
F101 = FieldSpec.prime(101)


def q(*xs):
    """Shorthand for a tuple of rationals from ints or 'n/d' strings."""
    return tuple(Fraction(x) for x in xs)


def rationals(bound=20, max_den=12):
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=max_den)


def residues(p=101):
    return st.integers(0, p - 1).map(lambda v: PrimeElement(v, p))


def scalars(spec):
    return rationals() if spec.is_rational else residues(spec.p)


def sample_tetrahedra(spec, n, seed=0, **kw):
    out = []
    i = 0
    while len(out) < n:
        T = random_tetrahedron(random.Random(seed + i), spec, **kw)
        i += 1
        if T is not None:
            out.append(T)
    return out


def sample_forms(spec, n, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        entries = [spec(rng.randint(-6, 6)) / rng.randint(1, 4) for _ in range(6)]
        try:
            out.append(SymForm(*entries))
        except ValueError:
            continue
    return out


def tetra(spec, form_rows, points):
    form = SymForm.from_matrix([[spec(Fraction(x)) for x in row] for row in form_rows])
    return Tetrahedron(tuple(Point3(*(spec(Fraction(c)) for c in P)) for P in points), form)


@pytest.fixture
def std_identity():
    return Tetrahedron.standard(SymForm.identity(QQ))


@pytest.fixture
def general_forms():
    return sample_forms(QQ, 25, seed=3) + sample_forms(F101, 25, seed=4)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
