"""Quadratic forms on a one-dimensional K-space V, in the k-basis {v0, rho*v0}.

A vector ``x*v0 + y*rho*v0`` is represented by the ExtScalar ``x + y*rho``.
Gram matrices are stored as the triple (g11, g12, g22).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator, NotABasis, NotAntiNormLike, NotPOrthogonal, NotSymmetric
from .field_ext import ExtScalar, QuadExtField, RationalLike, as_rational

Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class QuadraticForm:
    g11: Fraction
    g12: Fraction
    g22: Fraction
    field: QuadExtField

    def __post_init__(self):
        for name in ("g11", "g12", "g22"):
            value = getattr(self, name)
            if type(value) is not Fraction:
                object.__setattr__(self, name, as_rational(value))

    @classmethod
    def zero(cls, field: QuadExtField) -> QuadraticForm:
        return cls(Fraction(0), Fraction(0), Fraction(0), field)

    @classmethod
    def from_gram(cls, gram: Matrix2, field: QuadExtField) -> QuadraticForm:
        (g11, g12), (g21, g22) = gram
        if g12 != g21:
            raise NotSymmetric(f"Gram matrix is not symmetric: {g12} != {g21}")
        return cls(g11, g12, g22, field)

    @property
    def gram(self) -> Matrix2:
        return ((self.g11, self.g12), (self.g12, self.g22))

    @property
    def entries(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.g11, self.g12, self.g22)

    def _check(self, other: QuadraticForm) -> None:
        if other.field != self.field:
            raise ValueError(f"mixing forms over {self.field} and {other.field}")

    def __add__(self, other: QuadraticForm) -> QuadraticForm:
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        self._check(other)
        return QuadraticForm(
            self.g11 + other.g11, self.g12 + other.g12, self.g22 + other.g22, self.field
        )

    def __sub__(self, other: QuadraticForm) -> QuadraticForm:
        if not isinstance(other, QuadraticForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> QuadraticForm:
        return QuadraticForm(-self.g11, -self.g12, -self.g22, self.field)

    def scaled(self, c: RationalLike) -> QuadraticForm:
        c = as_rational(c)
        return QuadraticForm(c * self.g11, c * self.g12, c * self.g22, self.field)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scaled(c)
        return NotImplemented

    def __bool__(self) -> bool:
        return any(self.entries)

    def __call__(self, v: ExtScalar) -> Fraction:
        return evaluate(self, v)


@dataclass(frozen=True)
class EndoMatrix:
    """Matrix of a k-linear endomorphism, row convention f(v_i) = sum_j f_ij v_j."""

    f11: Fraction
    f12: Fraction
    f21: Fraction
    f22: Fraction

    def __post_init__(self):
        for name in ("f11", "f12", "f21", "f22"):
            value = getattr(self, name)
            if type(value) is not Fraction:
                object.__setattr__(self, name, as_rational(value))

    @classmethod
    def identity(cls) -> EndoMatrix:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def from_rows(cls, rows) -> EndoMatrix:
        (f11, f12), (f21, f22) = rows
        return cls(f11, f12, f21, f22)

    @property
    def rows(self) -> Matrix2:
        return ((self.f11, self.f12), (self.f21, self.f22))

    def det(self) -> Fraction:
        return self.f11 * self.f22 - self.f12 * self.f21

    def transpose(self) -> EndoMatrix:
        return EndoMatrix(self.f11, self.f21, self.f12, self.f22)

    def inverse(self) -> EndoMatrix:
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        return EndoMatrix(self.f22 / det, -self.f12 / det, -self.f21 / det, self.f11 / det)

    def __matmul__(self, other: EndoMatrix) -> EndoMatrix:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return EndoMatrix.from_rows(_matmul(self.rows, other.rows))

    def apply(self, v: ExtScalar) -> ExtScalar:
        """Image of ``x*v0 + y*rho*v0`` under the map, as an ExtScalar."""
        x, y = v.coords
        return ExtScalar(
            x * self.f11 + y * self.f21, x * self.f12 + y * self.f22, v.field
        )


def multiplication_matrix(z: ExtScalar) -> EndoMatrix:
    """Matrix of v -> z*v: rows are the coordinates of z*1 and z*rho."""
    a, b = z.coords
    return EndoMatrix(a, b, z.field.d * b, a)


def _matmul(m: Matrix2, n: Matrix2) -> Matrix2:
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _transpose(m: Matrix2) -> Matrix2:
    (a, b), (c, d) = m
    return ((a, c), (b, d))


def evaluate(q: QuadraticForm, v: ExtScalar) -> Fraction:
    x, y = v.coords
    return q.g11 * x * x + 2 * q.g12 * x * y + q.g22 * y * y


def polarize(q: QuadraticForm, v: ExtScalar, w: ExtScalar) -> Fraction:
    x1, y1 = v.coords
    x2, y2 = w.coords
    return q.g11 * x1 * x2 + q.g12 * (x1 * y2 + x2 * y1) + q.g22 * y1 * y2


def det_form(q: QuadraticForm) -> Fraction:
    return q.g11 * q.g22 - q.g12 * q.g12


def congruent(q: QuadraticForm, basis_change: EndoMatrix) -> QuadraticForm:
    """Gram matrix A M(q) A^t of ``q`` in the basis whose rows are given by ``A``."""
    a = basis_change.rows
    return QuadraticForm.from_gram(_matmul(_matmul(a, q.gram), _transpose(a)), q.field)


def left_product(f: EndoMatrix, q: QuadraticForm) -> QuadraticForm:
    """The form v -> (f(v), v)_q, whose Gram matrix is F M(q).

    Raises NotSymmetric unless f is symmetric with respect to q.
    """
    (p11, p12), (p21, p22) = _matmul(f.rows, q.gram)
    if p12 != p21:
        raise NotSymmetric("endomorphism is not symmetric with respect to the form")
    return QuadraticForm(p11, p12, p22, q.field)


def divide(p: QuadraticForm, n: QuadraticForm) -> EndoMatrix:
    """The unique F with (v, w)_p = (F v, w)_n, i.e. M(p) M(n)^-1."""
    p._check(n)
    det = det_form(n)
    if det == 0:
        raise DegenerateDenominator("denominator form is degenerate")
    n_inv = ((n.g22 / det, -n.g12 / det), (-n.g12 / det, n.g11 / det))
    return EndoMatrix.from_rows(_matmul(p.gram, n_inv))


def det_polarization(p: QuadraticForm, q: QuadraticForm) -> Fraction:
    """Polarization of the determinant map, viewed as a quadratic form on Q(V)."""
    return (p.g11 * q.g22 + q.g11 * p.g22) / 2 - p.g12 * q.g12


def is_orthogonal(p: QuadraticForm, q: QuadraticForm) -> bool:
    """True iff det(p + q) = det(p) + det(q)."""
    p._check(q)
    return det_polarization(p, q) == 0


def orthogonal_by_basis(
    p: QuadraticForm, q: QuadraticForm, v: ExtScalar, w: ExtScalar
) -> bool:
    """Orthogonality of p and q tested on a p-orthogonal basis {v, w}.

    The forms are orthogonal iff p(v) q(w) + q(v) p(w) = 0.
    """
    (x1, y1), (x2, y2) = v.coords, w.coords
    if x1 * y2 - x2 * y1 == 0:
        raise NotABasis(f"{v} and {w} are linearly dependent over k")
    if polarize(p, v, w) != 0:
        raise NotPOrthogonal("basis is not orthogonal with respect to p")
    return evaluate(p, v) * evaluate(q, w) + evaluate(q, v) * evaluate(p, w) == 0


def norm_like(c: RationalLike, field: QuadExtField) -> QuadraticForm:
    """c times the norm form: Gram (c, 0, -d*c)."""
    c = as_rational(c)
    return QuadraticForm(c, Fraction(0), -field.d * c, field)


def is_norm_like(q: QuadraticForm) -> bool:
    return q.g12 == 0 and q.g22 == -q.field.d * q.g11


def is_anti_norm_like(q: QuadraticForm) -> bool:
    # det-polarization against the norm form is (g22 - d*g11)/2
    return q.g22 == q.field.d * q.g11


def decompose(q: QuadraticForm) -> tuple[QuadraticForm, QuadraticForm]:
    """Split q uniquely into a norm-like part and an anti-norm-like part."""
    d = q.field.d
    ratio = q.g22 / d
    c = (q.g11 - ratio) / 2
    alpha = (q.g11 + ratio) / 2
    return norm_like(c, q.field), QuadraticForm(alpha, q.g12, d * alpha, q.field)


def scalar_mul_A(z: ExtScalar, q: QuadraticForm) -> QuadraticForm:
    """K-scalar multiplication on anti-norm-like forms: z q = m_conj(z) . q."""
    if not is_anti_norm_like(q):
        raise NotAntiNormLike("scalar multiplication by K is defined on anti-norm-like forms only")
    return left_product(multiplication_matrix(z.conj()), q)
