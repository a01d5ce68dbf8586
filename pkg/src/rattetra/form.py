"""Symmetric bilinear forms on three-dimensional row vectors.

A form is stored by its six independent entries::

    | a1 b3 b2 |
    | b3 a2 b1 |
    | b2 b1 a3 |

together with the quantities every downstream formula reuses: the
determinant ``delta``, the adjugate entries ``alpha``/``beta`` (laid out the
same way), the standard-edge quadrances ``r`` and the sum ``D`` of all
adjugate entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Tuple

from . import _matrix
from .errors import DegenerateForm, FieldMismatch, NonSymmetricForm
from .field import FieldSpec, Scalar, common_spec


@dataclass(frozen=True)
class Vector3:
    x: Scalar
    y: Scalar
    z: Scalar

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.x, self.y, self.z))

    def __add__(self, other: "Vector3") -> "Vector3":
        if not isinstance(other, Vector3):
            return NotImplemented
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vector3") -> "Vector3":
        if not isinstance(other, Vector3):
            return NotImplemented
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vector3":
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, k) -> "Vector3":
        return Vector3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    @property
    def spec(self) -> FieldSpec:
        return common_spec(self)


Matrix3 = Tuple[Tuple[Scalar, Scalar, Scalar], ...]


@dataclass(frozen=True)
class SymForm:
    """An invertible symmetric 3x3 form with its derived quantities cached."""

    a1: Scalar
    a2: Scalar
    a3: Scalar
    b1: Scalar
    b2: Scalar
    b3: Scalar
    spec: FieldSpec = field(init=False, compare=False, repr=False)
    delta: Scalar = field(init=False, compare=False, repr=False)
    alpha: Tuple[Scalar, Scalar, Scalar] = field(init=False, compare=False, repr=False)
    beta: Tuple[Scalar, Scalar, Scalar] = field(init=False, compare=False, repr=False)
    r: Tuple[Scalar, Scalar, Scalar] = field(init=False, compare=False, repr=False)
    D: Scalar = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        a1, a2, a3, b1, b2, b3 = self.a1, self.a2, self.a3, self.b1, self.b2, self.b3
        spec = common_spec((a1, a2, a3, b1, b2, b3))
        delta = a1 * a2 * a3 + 2 * b1 * b2 * b3 - a1 * b1 * b1 - a2 * b2 * b2 - a3 * b3 * b3
        if delta == 0:
            raise DegenerateForm("form is degenerate: determinant Δ=0")
        alpha = (a2 * a3 - b1 * b1, a1 * a3 - b2 * b2, a1 * a2 - b3 * b3)
        beta = (b2 * b3 - a1 * b1, b1 * b3 - a2 * b2, b1 * b2 - a3 * b3)
        r = (a2 + a3 - 2 * b1, a1 + a3 - 2 * b2, a1 + a2 - 2 * b3)
        D = alpha[0] + alpha[1] + alpha[2] + 2 * (beta[0] + beta[1] + beta[2])
        for name, value in (
            ("spec", spec),
            ("delta", delta),
            ("alpha", alpha),
            ("beta", beta),
            ("r", r),
            ("D", D),
        ):
            object.__setattr__(self, name, value)

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[Scalar]]) -> "SymForm":
        if len(m) != 3 or any(len(row) != 3 for row in m):
            raise NonSymmetricForm("form must be a 3x3 grid")
        common_spec(x for row in m for x in row)
        for i, j in ((0, 1), (0, 2), (1, 2)):
            if m[i][j] != m[j][i]:
                raise NonSymmetricForm(f"entry ({i + 1},{j + 1}) differs from ({j + 1},{i + 1})")
        return cls(m[0][0], m[1][1], m[2][2], m[1][2], m[0][2], m[0][1])

    @classmethod
    def identity(cls, spec: FieldSpec) -> "SymForm":
        one, zero = spec.one, spec.zero
        return cls(one, one, one, zero, zero, zero)

    @property
    def matrix(self) -> Matrix3:
        return (
            (self.a1, self.b3, self.b2),
            (self.b3, self.a2, self.b1),
            (self.b2, self.b1, self.a3),
        )

    @property
    def adjugate(self) -> Matrix3:
        (al1, al2, al3), (be1, be2, be3) = self.alpha, self.beta
        return ((al1, be3, be2), (be3, al2, be1), (be2, be1, al3))

    def _check(self, *vectors: Vector3) -> None:
        for v in vectors:
            try:
                self.spec.check(*v)
            except FieldMismatch:
                raise FieldMismatch(f"vector {v} is not over {self.spec}") from None

    def dot(self, u: Vector3, v: Vector3) -> Scalar:
        """The scalar product ``u B v^T``."""
        self._check(u, v)
        bv = (
            self.a1 * v.x + self.b3 * v.y + self.b2 * v.z,
            self.b3 * v.x + self.a2 * v.y + self.b1 * v.z,
            self.b2 * v.x + self.b1 * v.y + self.a3 * v.z,
        )
        return u.x * bv[0] + u.y * bv[1] + u.z * bv[2]

    def quad(self, v: Vector3) -> Scalar:
        return self.dot(v, v)

    def is_null(self, v: Vector3) -> bool:
        return self.quad(v) == 0

    def transformed(self, m: Matrix3) -> "SymForm":
        """The form ``m B m^T``."""
        return SymForm.from_matrix(_matrix.matmul(_matrix.matmul(m, self.matrix), _matrix.transpose(m)))


def form_new(matrix: Sequence[Sequence[Scalar]]) -> SymForm:
    return SymForm.from_matrix(matrix)


def dot_b(u: Vector3, v: Vector3, B: SymForm) -> Scalar:
    return B.dot(u, v)


def quad_form(v: Vector3, B: SymForm) -> Scalar:
    return B.quad(v)


def is_b_null(v: Vector3, B: SymForm) -> bool:
    return B.is_null(v)
