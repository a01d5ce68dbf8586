"""Exact rational trigonometry of tetrahedra over Q and F_p under an arbitrary symmetric bilinear form."""

from .affine import AffineMap, invariants_via_standard, map_to_standard, pull_back_point
from .circum import CircumResult, Plane, circumcentre, crelle_circumquadrance, midplane
from .errors import RatTetraError
from .field import FieldSpec, PrimeElement, scalar_arith
from .form import SymForm, Vector3, dot_b, form_new, is_b_null, quad_form
from .tetra import (
    MetricReport,
    Point3,
    Tetrahedron,
    archimedes,
    dihedral_spread,
    edge_vector,
    euler_four_point,
    metric_report,
    midpoint,
    quadrance,
    quadrea,
    quadrume,
)
from .theorems import VerifyReport, m_via_archimedes, m_via_determinant, n_value, richardson_number, verify_all

__version__ = "0.1.0"
