"""Canonical Gamma-monomial arithmetic and the exact zero test."""
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from deltafrac import (
    GammaMonomial,
    GammaPolynomial,
    GammaPole,
    as_rational,
    gamma_of,
    parse_gamma_polynomial,
    parse_rational,
    render_rational,
    to_float,
)
from deltafrac.exact import (
    is_integer,
    is_negative_integer,
    is_nonpositive_integer,
    is_positive_integer,
)

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)


class TestRationalLiterals:
    def test_parse_basic(self):
        assert parse_rational("1/2") == Q(1, 2)
        assert parse_rational("-5/2") == Q(-5, 2)
        assert parse_rational("7") == Q(7)
        assert parse_rational("0") == Q(0)
        assert parse_rational("  3/4 ") == Q(3, 4)

    def test_parse_normalizes(self):
        assert parse_rational("4/6") == Q(2, 3)
        assert parse_rational("-0") == Q(0)

    @pytest.mark.parametrize("bad", ["1.5", "1/-2", "", "a", "1/0", "1 / 2", "+3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_as_rational_rejects_floats(self):
        with pytest.raises(TypeError):
            as_rational(0.5)

    @given(rationals)
    def test_render_parse_round_trip(self, q):
        assert parse_rational(render_rational(q)) == q

    def test_predicates(self):
        assert is_integer(Q(4)) and not is_integer(Q(1, 2))
        assert is_positive_integer(1) and not is_positive_integer(0)
        assert is_nonpositive_integer(0) and is_nonpositive_integer(-3)
        assert not is_nonpositive_integer(Q(-1, 2))
        assert is_negative_integer(-1) and not is_negative_integer(0)


class TestGammaOf:
    def test_positive_integers_fold_to_factorials(self):
        assert gamma_of(1).render() == "1"
        assert gamma_of(4).render() == "6"
        assert gamma_of(10).as_fraction() == 362880

    def test_half_integer_shifts(self):
        assert gamma_of(Q(1, 2)).render() == "1*G(1/2)^1"
        assert gamma_of(Q(3, 2)).render() == "1/2*G(1/2)^1"
        assert gamma_of(Q(7, 2)).render() == "15/8*G(1/2)^1"
        assert gamma_of(Q(-1, 2)).render() == "-2*G(1/2)^1"
        assert gamma_of(Q(-7, 2)).render() == "16/105*G(1/2)^1"

    def test_pole(self):
        for x in (0, -1, -5):
            with pytest.raises(GammaPole):
                gamma_of(x)

    @given(rationals.filter(lambda q: q.denominator != 1))
    def test_shift_recurrence(self, x):
        # Gamma(x+1) = x * Gamma(x)
        lhs = GammaPolynomial.from_monomial(gamma_of(x + 1))
        rhs = x * GammaPolynomial.from_monomial(gamma_of(x))
        assert lhs == rhs

    @given(rationals.filter(lambda q: q.denominator != 1))
    def test_base_lands_in_unit_interval(self, x):
        ((base, exponent),) = gamma_of(x).factors
        assert 0 < base < 1 and exponent == 1

    def test_float_agrees_with_math_gamma(self):
        import math

        for x in (Q(1, 2), Q(5, 3), Q(-3, 4), Q(13, 6)):
            assert gamma_of(x).float_value() == pytest.approx(
                math.gamma(float(x)), rel=1e-12
            )


class TestGammaMonomial:
    def test_canonical_validation(self):
        with pytest.raises(ValueError):
            GammaMonomial(Q(1), ((Q(3, 2), 1),))  # base outside (0, 1)
        with pytest.raises(ValueError):
            GammaMonomial(Q(1), ((Q(1, 2), 0),))  # zero exponent
        with pytest.raises(ValueError):
            GammaMonomial(Q(1), ((Q(1, 2), 1), (Q(1, 3), 1)))  # unsorted

    def test_zero_clears_factors(self):
        assert GammaMonomial(Q(0), ((Q(1, 2), 1),)).factors == ()

    def test_mul_merges_and_cancels(self):
        g = gamma_of(Q(1, 2))
        assert (g * g).render() == "1*G(1/2)^2"
        inverse = GammaMonomial.one() / g
        assert (g * inverse).render() == "1"

    def test_pow(self):
        g = gamma_of(Q(3, 2))
        assert (g**2).render() == "1/4*G(1/2)^2"
        assert (g**0).render() == "1"
        assert (g**-1).render() == "2*G(1/2)^-1"

    def test_division_by_zero_monomial(self):
        with pytest.raises(ZeroDivisionError):
            GammaMonomial.one() / GammaMonomial(Q(0))


def poly(value) -> GammaPolynomial:
    if isinstance(value, GammaMonomial):
        return GammaPolynomial.from_monomial(value)
    return GammaPolynomial.from_rational(value)


gamma_monomials = st.builds(
    lambda q, x: gamma_of(x) * q,
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    rationals.filter(lambda q: not is_nonpositive_integer(q)),
)
gamma_polys = st.lists(gamma_monomials, min_size=0, max_size=4).map(
    lambda ms: sum((poly(m) for m in ms), GammaPolynomial.zero())
)


class TestGammaPolynomial:
    def test_zero_is_empty(self):
        assert GammaPolynomial.zero().is_zero
        assert GammaPolynomial.from_rational(0).is_zero
        assert poly(gamma_of(Q(1, 2))) - poly(gamma_of(Q(1, 2))) == 0

    def test_like_terms_combine(self):
        p = poly(gamma_of(Q(1, 2))) + poly(gamma_of(Q(3, 2))) * 2
        # Gamma(3/2) = (1/2) Gamma(1/2), so the sum collapses to one term
        assert p.render() == "2*G(1/2)^1"

    def test_cancellation_across_routes(self):
        # (2)_{-5/2} (1)_{1/2} + (1)_{-5/2} (2)_{1/2} = 0
        lhs = poly(gamma_of(Q(-1, 2))) * poly(gamma_of(Q(3, 2)))
        rhs = poly(gamma_of(Q(-3, 2))) * poly(gamma_of(Q(5, 2)))
        assert (lhs + rhs).is_zero

    def test_render_examples(self):
        assert GammaPolynomial.zero().render() == "0"
        p = poly(3) + poly(gamma_of(Q(1, 2))) * -2
        assert p.render() == "3 + -2*G(1/2)^1"

    @given(gamma_polys)
    def test_render_parse_round_trip(self, p):
        assert parse_gamma_polynomial(p.render()) == p

    @given(gamma_polys, gamma_polys)
    def test_addition_commutes(self, p, q):
        assert p + q == q + p

    @given(gamma_polys, gamma_polys, gamma_polys)
    def test_distributes(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(gamma_polys, gamma_polys)
    def test_multiplication_commutes(self, p, q):
        assert p * q == q * p

    @given(gamma_polys)
    def test_additive_inverse(self, p):
        assert (p + (-p)).is_zero

    @given(gamma_polys, gamma_polys)
    def test_to_float_additive(self, p, q):
        total = (p + q).to_float()
        assert total == pytest.approx(p.to_float() + q.to_float(), abs=1e-9, rel=1e-9)

    def test_scalar_coercions(self):
        p = poly(gamma_of(Q(1, 2)))
        assert 2 * p == p + p
        assert p - Q(0) == p
        assert (0 * p).is_zero

    def test_as_fraction(self):
        assert poly(Q(5, 3)).as_fraction() == Q(5, 3)
        assert GammaPolynomial.zero().as_fraction() == 0
        with pytest.raises(ValueError):
            poly(gamma_of(Q(1, 2))).as_fraction()

    def test_unhashable(self):
        with pytest.raises(TypeError):
            hash(GammaPolynomial.zero())

    def test_to_float_value(self):
        half = poly(gamma_of(Q(3, 2)))
        assert to_float(half) == pytest.approx(0.8862269254527580, rel=1e-12)
