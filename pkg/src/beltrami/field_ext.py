"""Exact arithmetic in Q and in a quadratic extension K = Q(rho), rho**2 = d.

Rationals are plain :class:`fractions.Fraction` values. An element of K is an
:class:`ExtScalar` ``a + b*rho`` that carries its :class:`QuadExtField`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import SquareDiscriminant, ZeroDiscriminant

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def is_rational_square(x: Fraction) -> bool:
    """Return True if ``x`` is the square of a rational number.

    With ``x = p/q`` in lowest terms, ``x`` is a square iff ``p*q`` is a
    perfect square.
    """
    x = as_rational(x)
    if x < 0:
        return False
    pq = x.numerator * x.denominator
    r = isqrt(pq)
    return r * r == pq


@dataclass(frozen=True)
class QuadExtField:
    """The field Q(rho) with rho**2 = d, d a nonzero non-square rational."""

    d: Fraction

    def __post_init__(self):
        d = as_rational(self.d)
        object.__setattr__(self, "d", d)
        if d == 0:
            raise ZeroDiscriminant("d must be nonzero")
        if is_rational_square(d):
            raise SquareDiscriminant(f"d = {d} is a square in Q")

    def __call__(self, a: RationalLike = 0, b: RationalLike = 0) -> ExtScalar:
        return ExtScalar(as_rational(a), as_rational(b), self)

    @property
    def zero(self) -> ExtScalar:
        return ExtScalar(Fraction(0), Fraction(0), self)

    @property
    def one(self) -> ExtScalar:
        return ExtScalar(Fraction(1), Fraction(0), self)

    @property
    def rho(self) -> ExtScalar:
        return ExtScalar(Fraction(0), Fraction(1), self)

    def __repr__(self) -> str:
        return f"QuadExtField(d={self.d})"


def make_field(d: RationalLike) -> QuadExtField:
    return QuadExtField(as_rational(d))


@dataclass(frozen=True)
class ExtScalar:
    """The element ``a + b*rho`` of a quadratic extension."""

    a: Fraction
    b: Fraction
    field: QuadExtField

    def __post_init__(self):
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", as_rational(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", as_rational(self.b))

    def _coerce(self, other) -> ExtScalar:
        if isinstance(other, ExtScalar):
            if other.field != self.field:
                raise ValueError(f"mixing elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExtScalar(Fraction(other), Fraction(0), self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtScalar(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtScalar(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> ExtScalar:
        return ExtScalar(-self.a, -self.b, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.d
        return ExtScalar(
            self.a * o.a + d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def conj(self) -> ExtScalar:
        return ExtScalar(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        return self.a * self.a - self.field.d * self.b * self.b

    def trace_half(self) -> Fraction:
        return self.a

    def inverse(self) -> ExtScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in K")
        return ExtScalar(self.a / n, -self.b / n, self.field)

    @property
    def coords(self) -> tuple[Fraction, Fraction]:
        """Coordinates in the k-basis {1, rho}."""
        return (self.a, self.b)

    def __repr__(self) -> str:
        return f"ExtScalar({self.a}, {self.b}; d={self.field.d})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*rho"


def conj(z: ExtScalar) -> ExtScalar:
    return z.conj()


def norm(z: ExtScalar) -> Fraction:
    """N(z) = z * conj(z) = a**2 - d*b**2."""
    return z.norm()


def trace_half(z: ExtScalar) -> Fraction:
    """Half the trace, (z + conj(z))/2; the identity on Q."""
    return z.trace_half()


def pairing(z: ExtScalar, u: ExtScalar) -> Fraction:
    """The symmetric bilinear form trace_half(z * conj(u)), polarization of the norm."""
    if z.field != u.field:
        raise ValueError(f"mixing elements of {z.field} and {u.field}")
    return z.a * u.a - z.field.d * z.b * u.b


def is_in_kperp(z: ExtScalar) -> bool:
    return z.a == 0
