import math
import random

import pytest

from rattetra.errors import NotPositiveDefinite, UnsupportedField
from rattetra.form import SymForm
from rattetra.fuzz import random_positive_definite_form, random_tetrahedron
from rattetra.oracle import TOLERANCE, euclidean_crosscheck, is_positive_definite

from conftest import F7, QQ, q, tetra

STANDARD = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_positive_definite_examples():
    assert is_positive_definite(SymForm.identity(QQ))
    assert not is_positive_definite(SymForm(*q(1, 1, -1, 0, 0, 0)))
    # leading minors 2, 3, 4
    B = SymForm(*q(2, 2, 2, 1, 1, 1))
    assert (B.a1, B.alpha[2], B.delta) == q(2, 3, 4)
    assert is_positive_definite(B)
    with pytest.raises(UnsupportedField):
        is_positive_definite(SymForm.identity(F7))


def _by_name(report):
    return {c.quantity: c for c in report.comparisons}


def test_crosscheck_standard_identity(std_identity):
    rep = euclidean_crosscheck(std_identity)
    assert rep.passed
    c = _by_name(rep)
    assert c["V vs 144 volume^2"].classical == pytest.approx(144 / 36, rel=1e-12)
    # corner dihedral angle of the Standard tetrahedron is arccos(1/sqrt 3)
    assert c["E23 vs sin^2 dihedral"].classical == pytest.approx(math.sin(math.acos(1 / math.sqrt(3))) ** 2)
    assert c["E23 vs sin^2 dihedral"].exact == pytest.approx(2 / 3)
    assert c["R vs circumradius^2"].classical == pytest.approx(0.75, rel=1e-12)
    assert len(rep.comparisons) == 6 + 4 + 1 + 6 + 1


def test_crosscheck_rejects_indefinite_and_prime():
    with pytest.raises(NotPositiveDefinite):
        euclidean_crosscheck(tetra(QQ, [(1, 0, 0), (0, 1, 0), (0, 0, -1)], STANDARD))
    with pytest.raises(UnsupportedField):
        euclidean_crosscheck(tetra(F7, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], STANDARD))


def test_random_identity_form_instances():
    I = SymForm.identity(QQ)
    for i in range(40):
        T = random_tetrahedron(random.Random(i), QQ, coord_bound=5, denom_bound=10, form=I)
        rep = euclidean_crosscheck(T)
        assert rep.max_deviation < TOLERANCE


def test_random_positive_definite_forms_are_positive_definite():
    for i in range(50):
        assert is_positive_definite(random_positive_definite_form(random.Random(i)))
