"""Exact scalar fields: the rationals and prime fields F_p with p > 3.

Rationals are carried by :class:`fractions.Fraction`, which already keeps
values reduced with a positive denominator.  Prime-field residues are
:class:`PrimeElement` instances.  Plain ``int`` values embed in either field
and may be mixed freely into arithmetic; mixing a rational with a residue,
or residues of different primes, raises :class:`FieldMismatch`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

from .errors import FieldMismatch, ParseError, ZeroDenominator

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")
_INTEGER_RE = re.compile(r"-?[0-9]+")


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _inverse_mod(a: int, p: int) -> int:
    old_r, r = a % p, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ZeroDenominator(f"{a} has no inverse modulo {p}")
    return old_s % p


class PrimeElement:
    """A residue class modulo a prime ``p``, stored as a value in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, PrimeElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p} elements mixed")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, (Fraction, float, complex)):
            raise FieldMismatch(f"cannot combine F_{self.p} element with {type(other).__name__}")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeElement(self.value * _inverse_mod(o, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeElement(o * _inverse_mod(self.value, self.p), self.p)

    def __neg__(self):
        return PrimeElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return PrimeElement(pow(_inverse_mod(self.value, self.p), -exponent, self.p), self.p)
        return PrimeElement(pow(self.value, exponent, self.p), self.p)

    def inverse(self) -> "PrimeElement":
        return PrimeElement(_inverse_mod(self.value, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"PrimeElement({self.value}, p={self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, PrimeElement]


@dataclass(frozen=True)
class FieldSpec:
    """Which field scalars live in: ``kind`` is ``"rational"`` or ``"prime"``."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
            if self.p <= 3:
                raise ValueError("characteristic 2 and 3 are excluded")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        """Parse ``rational`` or ``prime:<p>``."""
        text = text.strip()
        if text == "rational":
            return cls.rational()
        if text.startswith("prime:") and _INTEGER_RE.fullmatch(text[6:]):
            try:
                return cls.prime(int(text[6:]))
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"bad field spec {text!r}; expected 'rational' or 'prime:<p>'")

    def __str__(self):
        return "rational" if self.kind == "rational" else f"prime:{self.p}"

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    def __call__(self, value: Union[int, Fraction, PrimeElement]) -> Scalar:
        """Embed an integer (or, over Q, a fraction) into this field."""
        if self.kind == "rational":
            if isinstance(value, PrimeElement):
                raise FieldMismatch("prime residue given to the rational field")
            return Fraction(value)
        if isinstance(value, PrimeElement):
            self.check(value)
            return value
        if isinstance(value, Fraction):
            return PrimeElement(value.numerator, self.p) / value.denominator
        return PrimeElement(value, self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def contains(self, x) -> bool:
        if self.kind == "rational":
            return isinstance(x, Fraction)
        return isinstance(x, PrimeElement) and x.p == self.p

    def check(self, *values) -> None:
        for x in values:
            if not self.contains(x):
                raise FieldMismatch(f"{x!r} is not an element of {self}")

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        if self.kind == "rational":
            if not _RATIONAL_RE.fullmatch(text):
                raise ParseError(f"malformed rational {text!r}")
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ZeroDenominator(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den) if den else 1)
        if not _INTEGER_RE.fullmatch(text):
            raise ParseError(f"malformed F_{self.p} literal {text!r}")
        return PrimeElement(int(text), self.p)

    def format(self, x: Scalar) -> str:
        self.check(x)
        return str(x)


def spec_of(x: Scalar) -> FieldSpec:
    if isinstance(x, PrimeElement):
        return FieldSpec.prime(x.p)
    if isinstance(x, Fraction):
        return FieldSpec.rational()
    raise FieldMismatch(f"{x!r} is not a field scalar")


def common_spec(values: Iterable[Scalar]) -> FieldSpec:
    values = list(values)
    spec = spec_of(values[0])
    spec.check(*values[1:])
    return spec


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` (``add``, ``sub``, ``mul`` or ``div``) to two same-field scalars."""
    common_spec([a, b])
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDenominator("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")
