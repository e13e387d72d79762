"""Conformal structures on V, conformal dilatation, and its Beltrami-form formula."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExceptionalClass, VanishingLinearPart, ZeroForm, ZeroMap
from .field_ext import ExtScalar, QuadExtField
from .quadforms import (
    QuadraticForm,
    congruent,
    decompose,
    det_form,
    divide,
    is_anti_norm_like,
    is_norm_like,
    left_product,
    norm_like,
    scalar_mul_A,
)
from .semilinear import (
    AntiLinearMap,
    SemiLinearMap,
    beltrami,
    dcal,
    decompose_matrix,
    scalar_mul_hom,
)


class Tag(enum.Enum):
    REGULAR = "regular"
    EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class ConformalClass:
    """A nonzero quadratic form up to nonzero rational scaling.

    ``rep`` is normalized so that its first nonzero Gram entry, in the order
    (g11, g12, g22), equals 1. Build instances with :func:`conformal_class`.
    """

    rep: QuadraticForm
    tag: Tag

    @property
    def field(self) -> QuadExtField:
        return self.rep.field

    @property
    def is_regular(self) -> bool:
        return self.tag is Tag.REGULAR


def pullback(f: SemiLinearMap, q: QuadraticForm) -> QuadraticForm:
    """The form v -> q(f(v)), with Gram matrix F M(q) F^t."""
    return congruent(q, f.matrix())


def conformal_class(q: QuadraticForm) -> ConformalClass:
    lead = next((g for g in q.entries if g != 0), None)
    if lead is None:
        raise ZeroForm("the zero form has no conformal class")
    rep = q.scaled(1 / lead)
    tag = Tag.EXCEPTIONAL if is_anti_norm_like(rep) else Tag.REGULAR
    return ConformalClass(rep, tag)


def canonical_structure(field: QuadExtField) -> ConformalClass:
    return conformal_class(norm_like(1, field))


def _split_regular(c: ConformalClass) -> tuple[QuadraticForm, QuadraticForm]:
    if c.tag is Tag.EXCEPTIONAL:
        raise ExceptionalClass(f"class of {c.rep.entries} is exceptional")
    return decompose(c.rep)


def dd(c: ConformalClass) -> Fraction:
    """The canonical quadratic form on the regular classes: [n + q] -> -det q / det n."""
    n, q = _split_regular(c)
    return -det_form(q) / det_form(n)


def m_to_hom(c: ConformalClass) -> AntiLinearMap:
    """Identify a regular class [n + q] with the anti-linear map q/n."""
    n, q = _split_regular(c)
    f = decompose_matrix(divide(q, n), c.field)
    assert not f.a, "quotient of an anti-norm-like form by a norm-like form must be anti-linear"
    return AntiLinearMap(f.b)


def hom_to_m(f: AntiLinearMap, n: QuadraticForm | None = None) -> ConformalClass:
    """Identify an anti-linear map with the regular class [n + f.n].

    ``n`` may be any nonzero norm-like form; the class does not depend on it.
    """
    if n is None:
        n = norm_like(1, f.field)
    elif not n or not is_norm_like(n):
        raise ValueError("n must be a nonzero norm-like form")
    return conformal_class(n + left_product(f.matrix(), n))


def scalar_mul_M(z: ExtScalar, c: ConformalClass) -> ConformalClass:
    """K-scalar multiplication on regular classes: z [n + q] = [n + z q]."""
    n, q = _split_regular(c)
    return conformal_class(n + scalar_mul_A(z, q))


def dilatation(f: SemiLinearMap) -> ConformalClass:
    """Pullback by f of the canonical conformal structure of the target."""
    if not f:
        raise ZeroMap("the zero map has no conformal dilatation")
    return conformal_class(pullback(f, norm_like(1, f.field)))


def beltrami_expansion(f: SemiLinearMap) -> QuadraticForm:
    """(1 + D(mu)) n + 2 mu.n with n the pullback of the target norm form by Lf.

    Equals ``pullback(f, norm_like(1))`` exactly, not only up to scale.
    """
    mu = beltrami(f)
    n = pullback(f.linear_part, norm_like(1, f.field))
    return n.scaled(1 + dcal(mu)) + left_product(mu.matrix(), n).scaled(2)


def dilatation_via_beltrami(f: SemiLinearMap) -> ConformalClass:
    """Conformal dilatation computed from the Beltrami form alone.

    Regular branch: the class identified with 2 mu / (1 + D(mu)).
    Exceptional branch (1 + D(mu) = 0): the class of 2 mu.n.
    """
    if not f.a:
        raise VanishingLinearPart("the K-linear part of the map is zero")
    mu = beltrami(f)
    scale = 1 + dcal(mu)
    field = f.field
    if scale != 0:
        return hom_to_m(scalar_mul_hom(field(2 / scale), mu))
    mu_n = left_product(mu.matrix(), norm_like(1, field))
    result = conformal_class(scalar_mul_A(field(2), mu_n))
    assert result.tag is Tag.EXCEPTIONAL
    return result
