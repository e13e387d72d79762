"""k-linear maps between one-dimensional K-spaces in (a, b) pair form.

A :class:`SemiLinearMap` ``(a, b)`` sends ``z*v0`` to ``(a*z + b*conj(z))*w0``:
``a`` is the K-linear part and ``b`` the anti-linear part. An
:class:`AntiLinearMap` is an element of Hom_a(V, V), stored by its value ``b``
at ``v0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import VanishingLinearPart
from .field_ext import ExtScalar, QuadExtField, pairing
from .quadforms import EndoMatrix, multiplication_matrix


def _matrix_of(a: ExtScalar, b: ExtScalar) -> EndoMatrix:
    # f(1) = a + b and f(rho) = (a - b)*rho, written in the basis {1, rho}
    first = a + b
    second = (a - b) * a.field.rho
    return EndoMatrix(first.a, first.b, second.a, second.b)


@dataclass(frozen=True)
class SemiLinearMap:
    a: ExtScalar
    b: ExtScalar

    def __post_init__(self):
        if self.a.field != self.b.field:
            raise ValueError("linear and anti-linear parts live in different fields")

    @property
    def field(self) -> QuadExtField:
        return self.a.field

    def __call__(self, z: ExtScalar) -> ExtScalar:
        return self.apply(z)

    def apply(self, z: ExtScalar) -> ExtScalar:
        return self.a * z + self.b * z.conj()

    def matrix(self) -> EndoMatrix:
        return _matrix_of(self.a, self.b)

    @property
    def linear_part(self) -> SemiLinearMap:
        return SemiLinearMap(self.a, self.field.zero)

    @property
    def anti_part(self) -> AntiLinearMap:
        return AntiLinearMap(self.b)

    def compose(self, other: SemiLinearMap) -> SemiLinearMap:
        """The map ``self o other`` (apply ``other`` first)."""
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return SemiLinearMap(a1 * a2 + b1 * b2.conj(), a1 * b2 + b1 * a2.conj())

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)


@dataclass(frozen=True)
class AntiLinearMap:
    """The anti-linear endomorphism ``z*v0 -> b*conj(z)*v0``."""

    b: ExtScalar

    @classmethod
    def zero(cls, field: QuadExtField) -> AntiLinearMap:
        return cls(field.zero)

    @classmethod
    def reflection(cls, field: QuadExtField) -> AntiLinearMap:
        """Conjugation relative to v0; squares to the identity and has det -1."""
        return cls(field.one)

    @property
    def field(self) -> QuadExtField:
        return self.b.field

    def __call__(self, z: ExtScalar) -> ExtScalar:
        return self.apply(z)

    def apply(self, z: ExtScalar) -> ExtScalar:
        return self.b * z.conj()

    def matrix(self) -> EndoMatrix:
        return _matrix_of(self.field.zero, self.b)

    def as_semilinear(self) -> SemiLinearMap:
        return SemiLinearMap(self.field.zero, self.b)

    def __bool__(self) -> bool:
        return bool(self.b)


def from_pair(a: ExtScalar, b: ExtScalar) -> SemiLinearMap:
    return SemiLinearMap(a, b)


def decompose_matrix(
    f: EndoMatrix, field: QuadExtField, rho: ExtScalar | None = None
) -> SemiLinearMap:
    """Recover the L/A pair of a k-linear endomorphism given by its matrix.

    Since f(r v) = r Lf(v) - r Af(v) for trace-zero ``r``, we get
    Lf(v) = (f(v) + r^-1 f(r v))/2 and Af(v) = (f(v) - r^-1 f(r v))/2,
    evaluated at v = v0 for any nonzero trace-zero ``r`` (default: rho).
    """
    r = field.rho if rho is None else rho
    if r.field != field or r.a != 0 or not r:
        raise ValueError("rho must be a nonzero trace-zero element of the field")
    image = f.apply(field.one)
    twisted = r.inverse() * f.apply(r)
    return SemiLinearMap((image + twisted) / 2, (image - twisted) / 2)


def mult_map(z: ExtScalar) -> EndoMatrix:
    """Matrix of multiplication by z; its determinant is N(z)."""
    return multiplication_matrix(z)


def compose_anti(f: AntiLinearMap, g: AntiLinearMap) -> ExtScalar:
    """The scalar w with f o g = m_w."""
    return f.b * g.b.conj()


def pairing_hom(f: AntiLinearMap, g: AntiLinearMap) -> Fraction:
    """Half the k-trace of f o g."""
    return pairing(f.b, g.b)


def dcal(f: AntiLinearMap) -> Fraction:
    """Canonical quadratic form on Hom_a(V, V): f o f = dcal(f) id, det f = -dcal(f)."""
    return f.b.norm()


def beltrami(f: SemiLinearMap) -> AntiLinearMap:
    """The Beltrami form (Lf)^-1 o Af, the anti-linear map with value b/a."""
    if not f.a:
        raise VanishingLinearPart("the K-linear part of the map is zero")
    return AntiLinearMap(f.b / f.a)


def scalar_mul_hom(z: ExtScalar, f: AntiLinearMap) -> AntiLinearMap:
    return AntiLinearMap(z * f.b)
