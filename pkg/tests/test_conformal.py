from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from beltrami import (
    AntiLinearMap,
    ExceptionalClass,
    QuadraticForm,
    SemiLinearMap,
    Tag,
    VanishingLinearPart,
    ZeroForm,
    ZeroMap,
    beltrami,
    beltrami_expansion,
    canonical_structure,
    conformal_class,
    dcal,
    dd,
    decompose,
    dilatation,
    dilatation_via_beltrami,
    evaluate,
    from_pair,
    hom_to_m,
    is_anti_norm_like,
    m_to_hom,
    make_field,
    mult_map,
    norm,
    norm_like,
    pullback,
    scalar_mul_A,
    scalar_mul_hom,
    scalar_mul_M,
)

from . import oracles
from .conftest import fields, rationals, scalars

G = make_field(-1)
R2 = make_field(2)


def form(field, *g):
    return QuadraticForm(*g, field)


def forms(field):
    return st.builds(QuadraticForm, rationals, rationals, rationals, st.just(field))


def pairs(field):
    return st.builds(SemiLinearMap, scalars(field), scalars(field))


def antis(field):
    return st.builds(AntiLinearMap, scalars(field))


def regular_classes(field):
    return forms(field).filter(lambda q: bool(q) and not is_anti_norm_like(q)).map(conformal_class)


class TestPullback:
    def test_identity(self):
        q = form(R2, 2, -4, 4)
        assert pullback(from_pair(R2.one, R2.zero), q) == q

    def test_worked_gaussian(self):
        f = from_pair(G(2), G(1))
        expected = oracles.pullback_of_norm(G(2).coords, G(1).coords, G.d)
        assert expected == (9, 0, 1)
        assert pullback(f, norm_like(1, G)).entries == expected

    def test_worked_exceptional(self):
        f = from_pair(R2.one, R2(1, 1))
        expected = oracles.pullback_of_norm(R2.one.coords, R2(1, 1).coords, R2.d)
        assert expected == (2, -4, 4)
        assert pullback(f, norm_like(1, R2)).entries == expected

    @given(st.data())
    def test_evaluation(self, data):
        K = data.draw(fields)
        f = data.draw(pairs(K))
        q = data.draw(forms(K))
        v = data.draw(scalars(K))
        assert evaluate(pullback(f, q), v) == evaluate(q, f(v))

    @given(st.data())
    def test_functorial(self, data):
        K = data.draw(fields)
        f, g = data.draw(pairs(K)), data.draw(pairs(K))
        q = data.draw(forms(K))
        assert pullback(g.compose(f), q) == pullback(f, pullback(g, q))


class TestConformalClass:
    def test_regular(self):
        c = conformal_class(form(G, 5, 0, 5))
        assert c.rep == form(G, 1, 0, 1) and c.tag is Tag.REGULAR

    def test_exceptional(self):
        c = conformal_class(form(R2, 2, -4, 4))
        assert c.rep == form(R2, 1, -2, 2) and c.tag is Tag.EXCEPTIONAL

    def test_leading_zero_entries(self):
        assert conformal_class(form(G, 0, -3, 6)).rep == form(G, 0, 1, -2)
        assert conformal_class(form(G, 0, 0, -4)).rep == form(G, 0, 0, 1)

    def test_zero_form(self):
        with pytest.raises(ZeroForm):
            conformal_class(QuadraticForm.zero(G))

    @given(st.data())
    def test_projective(self, data):
        K = data.draw(fields)
        q = data.draw(forms(K).filter(bool))
        c = data.draw(rationals.filter(bool))
        assert conformal_class(q.scaled(c)) == conformal_class(q)
        assert conformal_class(q).rep.entries == oracles.normalize(q.entries)


class TestCanonical:
    def test_reps(self):
        assert canonical_structure(G).rep == form(G, 1, 0, 1)
        assert canonical_structure(R2).rep == form(R2, 1, 0, -2)
        assert canonical_structure(R2).tag is Tag.REGULAR

    @given(st.data())
    def test_invariant_under_multiplication(self, data):
        K = data.draw(fields)
        z = data.draw(scalars(K).filter(bool))
        assert dilatation(from_pair(z, K.zero)) == canonical_structure(K)
        assert conformal_class(pullback(from_pair(z, K.zero), norm_like(1, K))) == (
            canonical_structure(K)
        )
        assert mult_map(z).det() == norm(z)


class TestDD:
    def test_canonical(self):
        assert dd(canonical_structure(R2)) == 0

    def test_worked(self):
        assert dd(conformal_class(form(G, 9, 0, 1))) == Fraction(16, 25)

    def test_exceptional(self):
        with pytest.raises(ExceptionalClass):
            dd(conformal_class(form(R2, 2, -4, 4)))

    @given(st.data())
    def test_norm_like_on_m(self, data):
        K = data.draw(fields)
        c = data.draw(regular_classes(K))
        z = data.draw(scalars(K))
        assert dd(scalar_mul_M(z, c)) == norm(z) * dd(c)


class TestIdentification:
    def test_canonical_is_zero(self):
        assert m_to_hom(canonical_structure(G)) == AntiLinearMap.zero(G)
        assert hom_to_m(AntiLinearMap.zero(G)) == canonical_structure(G)

    def test_worked(self):
        c = conformal_class(form(G, 9, 0, 1))
        f = m_to_hom(c)
        assert f == AntiLinearMap(G(Fraction(4, 5)))
        assert dcal(f) == Fraction(16, 25) == dd(c)
        assert hom_to_m(f) == c

    def test_exceptional(self):
        with pytest.raises(ExceptionalClass):
            m_to_hom(conformal_class(form(R2, 2, -4, 4)))

    @given(st.data())
    def test_round_trips(self, data):
        K = data.draw(fields)
        f = data.draw(antis(K))
        c = data.draw(regular_classes(K))
        assert hom_to_m(f).tag is Tag.REGULAR
        assert m_to_hom(hom_to_m(f)) == f
        assert hom_to_m(m_to_hom(c)) == c
        assert dd(hom_to_m(f)) == dcal(f)
        assert dcal(m_to_hom(c)) == dd(c)

    @given(st.data())
    def test_independent_of_norm_form(self, data):
        K = data.draw(fields)
        f = data.draw(antis(K))
        n = norm_like(data.draw(rationals.filter(bool)), K)
        assert hom_to_m(f, n) == hom_to_m(f)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            hom_to_m(AntiLinearMap(G.one), form(G, 1, 0, 0))

    @given(st.data())
    def test_k_linear(self, data):
        K = data.draw(fields)
        f = data.draw(antis(K))
        z = data.draw(scalars(K))
        assert hom_to_m(scalar_mul_hom(z, f)) == scalar_mul_M(z, hom_to_m(f))


class TestScalarMulM:
    def test_unit_and_zero(self):
        c = conformal_class(form(G, 9, 0, 1))
        assert scalar_mul_M(G.one, c) == c
        assert scalar_mul_M(G.zero, c) == canonical_structure(G)

    def test_exceptional(self):
        with pytest.raises(ExceptionalClass):
            scalar_mul_M(R2.one, conformal_class(form(R2, 2, -4, 4)))

    @given(st.data())
    def test_independent_of_representative(self, data):
        K = data.draw(fields)
        q = data.draw(forms(K).filter(lambda q: bool(q) and not is_anti_norm_like(q)))
        s = data.draw(rationals.filter(bool))
        z, u = data.draw(scalars(K)), data.draw(scalars(K))
        n, a = decompose(q.scaled(s))
        assert conformal_class(n + scalar_mul_A(z, a)) == scalar_mul_M(z, conformal_class(q))
        c = conformal_class(q)
        assert scalar_mul_M(z, scalar_mul_M(u, c)) == scalar_mul_M(z * u, c)


class TestDilatation:
    def test_k_linear_is_conformal(self):
        assert dilatation(from_pair(R2(3, 1), R2.zero)) == canonical_structure(R2)

    def test_worked(self):
        c = dilatation(from_pair(G(2), G(1)))
        assert c == conformal_class(form(G, 9, 0, 1)) and c.tag is Tag.REGULAR

    def test_worked_exceptional(self):
        c = dilatation(from_pair(R2.one, R2(1, 1)))
        assert c == conformal_class(form(R2, 2, -4, 4)) and c.tag is Tag.EXCEPTIONAL

    def test_zero_map(self):
        with pytest.raises(ZeroMap):
            dilatation(from_pair(G.zero, G.zero))

    @given(st.data())
    def test_target_representative_immaterial(self, data):
        K = data.draw(fields)
        f = data.draw(pairs(K).filter(bool))
        c = data.draw(rationals.filter(bool))
        assert conformal_class(pullback(f, norm_like(c, K))) == dilatation(f)

    @given(st.data())
    def test_pure_anti_linear(self, data):
        K = data.draw(fields)
        b = data.draw(scalars(K).filter(bool))
        assert dilatation(from_pair(K.zero, b)) == canonical_structure(K)


class TestDilatationViaBeltrami:
    def test_linear(self):
        assert dilatation_via_beltrami(from_pair(G.one, G.zero)) == canonical_structure(G)

    def test_worked_regular(self):
        f = from_pair(G(2), G(1))
        mu = beltrami(f)
        assert mu.b == G(Fraction(1, 2)) and dcal(mu) == Fraction(1, 4)
        assert (2 / (1 + dcal(mu))) * mu.b == G(Fraction(4, 5))
        assert dilatation_via_beltrami(f) == conformal_class(form(G, 9, 0, 1)) == dilatation(f)

    def test_worked_exceptional(self):
        f = from_pair(R2.one, R2(1, 1))
        assert dcal(beltrami(f)) == -1
        c = dilatation_via_beltrami(f)
        assert c.tag is Tag.EXCEPTIONAL
        assert c == conformal_class(form(R2, 2, -4, 4)) == dilatation(f)

    def test_vanishing(self):
        with pytest.raises(VanishingLinearPart):
            dilatation_via_beltrami(from_pair(G.zero, G.one))

    @given(st.data())
    def test_agrees_with_definition(self, data):
        K = data.draw(fields)
        f = data.draw(pairs(K).filter(lambda f: bool(f.a)))
        c = dilatation(f)
        assert dilatation_via_beltrami(f) == c
        assert (c.tag is Tag.REGULAR) == (1 + dcal(beltrami(f)) != 0)

    @given(st.data())
    def test_expansion_is_exact_pullback(self, data):
        K = data.draw(fields)
        f = data.draw(pairs(K).filter(lambda f: bool(f.a)))
        assert beltrami_expansion(f) == pullback(f, norm_like(1, K))

    @given(st.data())
    def test_exceptional_branch(self, data):
        # mu = u * mu0 / conj(u) keeps N(mu) = N(mu0) = -1
        K = make_field(data.draw(st.sampled_from([2, 5])))
        mu0 = {2: K(1, 1), 5: K(2, 1)}[int(K.d)]
        u = data.draw(scalars(K).filter(bool))
        a = data.draw(scalars(K).filter(bool))
        f = from_pair(a, a * mu0 * u / u.conj())
        assume(norm(f.b / f.a) == -1)
        c = dilatation(f)
        assert c.tag is Tag.EXCEPTIONAL
        assert dilatation_via_beltrami(f) == c


@given(st.data())
def test_negative_discriminant_always_regular(data):
    K = make_field(data.draw(st.sampled_from([-1, -5, -3, Fraction(-2, 7)])))
    f = data.draw(pairs(K).filter(bool))
    assert dilatation(f).tag is Tag.REGULAR
    if f.a:
        assert 1 + dcal(beltrami(f)) > 0


def test_no_norm_minus_one_over_q_sqrt3():
    """Q(sqrt 3) has no exceptional maps with nonzero linear part.

    x^2 - 3y^2 = -1 in Q means X^2 + Z^2 = 3Y^2 in coprime integers; squares
    mod 3 are 0 or 1, so 3 | X and 3 | Z, then 3 | Y, contradicting coprimality.
    """
    assert {(x, z) for x in range(3) for z in range(3) if (x * x + z * z) % 3 == 0} == {(0, 0)}
    assert oracles.norm_minus_one_search(Fraction(3)) == []
    assert oracles.norm_minus_one_search(Fraction(2)) and oracles.norm_minus_one_search(Fraction(5))


@given(st.data())
def test_q_sqrt3_never_exceptional(data):
    K = make_field(3)
    f = data.draw(pairs(K).filter(bool))
    assert dilatation(f).tag is Tag.REGULAR
