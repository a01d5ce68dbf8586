from fractions import Fraction

import pytest

from rattetra import _matrix
from rattetra.affine import invariants_via_standard, map_to_standard, pull_back_point, standard_report
from rattetra.errors import DegenerateTetrahedron
from rattetra.form import SymForm, Vector3
from rattetra.tetra import EDGES, TRIANGLES, Point3, Tetrahedron, metric_report, standard_points

from conftest import F101, QQ, q, sample_forms, sample_tetrahedra, tetra

IDENTITY = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_standard_maps_to_itself():
    C = SymForm(*q(2, 3, 5, 1, -1, "1/2"))
    T = Tetrahedron.standard(C)
    phi, B = map_to_standard(T)
    assert phi.linear == _matrix.identity(3, Fraction(1))
    assert B == C


def test_scaled_tetrahedron():
    T = tetra(QQ, IDENTITY, [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    phi, B = map_to_standard(T)
    half, z = Fraction(1, 2), Fraction(0)
    assert phi.linear == ((half, z, z), (z, half, z), (z, z, half))
    assert B == SymForm(*q(4, 4, 4, 0, 0, 0))
    assert B.quad(Vector3(*q(1, 0, 0))) == T.form.quad(T.points[1] - T.points[0]) == 4
    assert pull_back_point(phi, Point3(*q(1, 0, 0))) == Point3(*q(2, 0, 0))
    via = invariants_via_standard(T)
    assert via.Q[0, 1] == 4
    # 4 det B, with B = 4 I
    assert via.V == 256 == metric_report(T).V


def test_collinear_points_are_degenerate():
    T = tetra(QQ, IDENTITY, [(0, 0, 0), (1, 1, 1), (2, 2, 2), (0, 0, 1)])
    with pytest.raises(DegenerateTetrahedron):
        map_to_standard(T)
    with pytest.raises(DegenerateTetrahedron):
        invariants_via_standard(T)


def test_identity_map_pull_back():
    phi, _ = map_to_standard(Tetrahedron.standard(SymForm.identity(QQ)))
    P = Point3(*q("3/7", -2, 5))
    assert pull_back_point(phi, P) == P


@pytest.mark.parametrize("spec", [QQ, F101])
def test_map_sends_vertices_to_standard_and_round_trips(spec):
    samples = sample_tetrahedra(spec, 40, seed=200)
    for T in samples:
        phi, _ = map_to_standard(T)
        assert tuple(phi.apply(P) for P in T.points) == standard_points(spec)
        other = samples[0].points[1]
        assert phi.pull_back(phi.apply(other)) == other
        assert phi.apply(phi.pull_back(other)) == other


@pytest.mark.parametrize("spec", [QQ, F101])
def test_induced_form_identity(spec):
    samples = sample_tetrahedra(spec, 100, seed=300)
    for n, T in enumerate(samples):
        phi, B = map_to_standard(T)
        std = Tetrahedron.standard(B)
        u = samples[(n + 1) % len(samples)].points[2] - samples[(n + 2) % len(samples)].points[3]
        v = samples[(n + 3) % len(samples)].points[1] - T.points[0]
        assert T.form.dot(u, v) == B.dot(phi.apply_vector(u), phi.apply_vector(v))
        direct, moved = metric_report(T), metric_report(std)
        for e in EDGES:
            assert direct.Q[e] == moved.Q[e]
            assert direct.E[e] == moved.E[e]
        for t in TRIANGLES:
            assert direct.A[t] == moved.A[t]
        assert direct.V == moved.V
        # det B = det C det(M)^2 with M the edge-row matrix
        assert B.delta == T.form.delta * _matrix.det3(phi.inverse_linear) ** 2


@pytest.mark.parametrize("spec", [QQ, F101])
def test_dual_path_reports_equal(spec):
    for T in sample_tetrahedra(spec, 100, seed=400):
        assert metric_report(T) == invariants_via_standard(T)


@pytest.mark.parametrize("spec", [QQ, F101])
def test_closed_form_report_matches_generic_code(spec):
    for B in sample_forms(spec, 60, seed=9):
        assert standard_report(B) == metric_report(Tetrahedron.standard(B))


def test_closed_form_report_marks_null_faces():
    B = SymForm(*q(1, 1, 1, 1, 0, 1))
    rep = standard_report(B)
    assert [e for e in EDGES if rep.E[e] is not None] == [(1, 3)]
    assert rep == metric_report(Tetrahedron.standard(B))
