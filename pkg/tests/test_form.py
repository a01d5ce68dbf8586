from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rattetra._matrix import identity, matmul
from rattetra.errors import DegenerateForm, FieldMismatch, NonSymmetricForm
from rattetra.field import FieldSpec, PrimeElement
from rattetra.form import SymForm, Vector3, dot_b, form_new, is_b_null, quad_form

from conftest import F101, QQ, q, rationals, residues, sample_forms


def Q3(*xs):
    return Vector3(*q(*xs))


def diag(spec, *d):
    z = spec.zero
    return form_new([[spec(d[0]), z, z], [z, spec(d[1]), z], [z, z, spec(d[2])]])


def test_identity_form_quantities():
    B = form_new([[Fraction(int(i == j)) for j in range(3)] for i in range(3)])
    assert B.delta == 1
    assert B.alpha == q(1, 1, 1)
    assert B.beta == q(0, 0, 0)
    assert B.r == q(2, 2, 2)
    assert B.D == 3


def test_diagonal_form_quantities():
    B = diag(QQ, 1, 2, 3)
    # cofactors of diag(1,2,3): 2*3, 1*3, 1*2
    assert B.delta == 6
    assert B.alpha == q(6, 3, 2)
    assert B.beta == q(0, 0, 0)
    assert B.D == 11


def test_rank_one_form_is_degenerate():
    with pytest.raises(DegenerateForm, match="Δ=0"):
        form_new([[Fraction(1)] * 3 for _ in range(3)])


def test_non_symmetric_rejected():
    m = [list(q(1, 2, 0)), list(q(0, 1, 0)), list(q(0, 0, 1))]
    with pytest.raises(NonSymmetricForm):
        form_new(m)
    with pytest.raises(NonSymmetricForm):
        form_new([list(q(1, 0)), list(q(0, 1))])


def test_entry_layout():
    B = SymForm(*q(1, 2, 3, 4, 5, 6))
    assert B.matrix == (q(1, 6, 5), q(6, 2, 4), q(5, 4, 3))
    assert SymForm.from_matrix(B.matrix) == B


def test_dot_examples():
    I = SymForm.identity(QQ)
    assert dot_b(Q3(1, 0, 0), Q3(1, 0, 0), I) == 1
    assert dot_b(Q3(1, 1, 1), Q3(1, 1, 1), I) == 3
    B = SymForm(*q(2, 3, 5, "1/7", "2/7", "3/7"))
    assert dot_b(Q3(1, 0, 0), Q3(0, 1, 0), B) == B.b3
    assert dot_b(Q3(0, 1, 0), Q3(0, 0, 1), B) == B.b1
    assert dot_b(Q3(1, 0, 0), Q3(0, 0, 1), B) == B.b2


def test_quad_form_examples():
    I = SymForm.identity(QQ)
    assert quad_form(Q3(0, 0, 0), I) == 0
    assert quad_form(Q3(1, 1, 0), I) == 2
    B = SymForm(*q(5, 1, 1, 0, 0, 0))
    assert quad_form(Q3(1, 0, 0), B) == 5


def test_null_vectors():
    F5 = FieldSpec.prime(5)
    B = diag(F5, 1, 4, 1)
    # 1 + 4 = 5 = 0 mod 5
    assert is_b_null(Vector3(F5(1), F5(1), F5(0)), B)
    assert is_b_null(Vector3(F5(0), F5(0), F5(0)), B)
    assert not is_b_null(Q3(1, 0, 0), SymForm.identity(QQ))


def test_vector_field_must_match_form():
    with pytest.raises(FieldMismatch):
        SymForm.identity(QQ).dot(Vector3(*(PrimeElement(1, 7),) * 3), Q3(1, 0, 0))


@pytest.mark.parametrize("spec", [QQ, F101])
def test_cofactor_identity(spec):
    for B in sample_forms(spec, 60, seed=11):
        assert matmul(B.matrix, B.adjugate) == identity(3, B.delta)


@pytest.mark.parametrize("spec", [QQ, F101])
def test_D_sums_adjugate_entries(spec):
    one = Vector3(spec.one, spec.one, spec.one)
    for B in sample_forms(spec, 60, seed=12):
        # det adj(B) = delta^2 != 0, so adj(B) is itself a valid form
        adj = SymForm.from_matrix(B.adjugate)
        assert adj.quad(one) == B.D
        assert sum((x for row in B.adjugate for x in row), spec.zero) == B.D


def _form(entries):
    try:
        return SymForm(*entries)
    except DegenerateForm:
        return None


def _check_bilinear(xs):
    B = _form(xs[:6])
    if B is None:
        return
    u, v, w, lam = Vector3(*xs[6:9]), Vector3(*xs[9:12]), Vector3(*xs[12:15]), xs[15]
    assert B.dot(u * lam + w, v) == lam * B.dot(u, v) + B.dot(w, v)
    assert B.dot(u, v) == B.dot(v, u)


@given(st.lists(rationals(), min_size=16, max_size=16))
def test_bilinear_and_symmetric_over_q(xs):
    _check_bilinear(xs)


@given(st.lists(residues(), min_size=16, max_size=16))
def test_bilinear_and_symmetric_over_fp(xs):
    _check_bilinear(xs)
