import random
from fractions import Fraction
from itertools import product

import pytest

from procompletion.domain.entities.coefficients import RingTag
from procompletion.domain.entities.series import Series, SeriesContext, group_commutator, lie_bracket
from procompletion.domain.services.group import signed_power
from procompletion.shared.exceptions import (
    CoefficientDomainError,
    ContextMismatchError,
    PreconditionError,
    TruncationError,
    WordError,
)

from conftest import random_series


def one_plus(context, j):
    return Series.one(context) + Series.generator(context, j)


def homogeneous(rng, context, k):
    return Series(context, {w: rng.randint(-3, 3) for w in product(range(1, context.n + 1), repeat=k)})


class TestConstruction:
    def test_terms_beyond_truncation_are_dropped(self, rat_context):
        g = Series(rat_context, {(1, 1, 1, 1, 1): 5, (1,): 2})
        assert g.terms() == [((1,), Fraction(2))]

    def test_zero_coefficients_vanish(self, rat_context):
        assert Series(rat_context, {(1,): 0}).is_zero()

    def test_letters_are_validated(self, rat_context):
        with pytest.raises(WordError):
            Series(rat_context, {(3,): 1})

    def test_terms_are_graded_lex(self, rat_context):
        g = Series(rat_context, {(2,): 1, (1, 1): 1, (1,): 1, (): 1})
        assert g.words() == [(), (1,), (2,), (1, 1)]

    def test_integer_ring_rejects_fractions(self, int_context):
        with pytest.raises(CoefficientDomainError):
            Series(int_context, {(1,): Fraction(1, 2)})


class TestBoundedZeros:
    def test_cancelled_terms_keep_their_precision(self):
        context = SeriesContext(1, 2, RingTag.padic(2, 4))
        g = Series.monomial(context, (1,), Fraction(1, 2)) + Series.monomial(context, (1,), Fraction(15, 2))
        assert g.is_zero()
        assert g.min_degree() is None
        [(word, coeff)] = g.terms()
        assert word == (1,)
        assert coeff.absolute_precision == 3

    def test_exact_cancellation_drops_the_term(self, rat_context):
        g = Series.generator(rat_context, 1)
        assert (g - g).terms() == []


class TestArithmetic:
    def test_product_is_noncommutative(self, rat_context):
        a, b = Series.generator(rat_context, 1), Series.generator(rat_context, 2)
        assert (a * b).coefficient((1, 2)) == 1
        assert (a * b).coefficient((2, 1)) == 0
        assert lie_bracket(a, b) == a * b - b * a

    def test_product_truncates(self):
        context = SeriesContext(1, 2, RingTag.integer())
        x = Series.generator(context, 1)
        assert (x * x * x).is_zero()

    def test_contexts_must_agree(self, rat_context, int_context):
        with pytest.raises(ContextMismatchError):
            Series.one(rat_context) + Series.one(int_context)

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_inverse(self, rat_context, seed):
        g = random_series(random.Random(seed), rat_context)
        one = Series.one(rat_context)
        assert g * g.inverse() == one
        assert g.inverse() * g == one

    def test_inverse_over_integers_stays_integral(self, int_context):
        g = one_plus(int_context, 1)
        inverse = g.inverse()
        assert inverse.coefficient((1, 1, 1)) == -1
        assert inverse.is_integral()

    def test_inverse_needs_unit_constant(self, rat_context):
        with pytest.raises(PreconditionError):
            Series.generator(rat_context, 1).inverse()

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_exp_ln_are_inverse(self, rat_context, seed):
        g = random_series(random.Random(seed), rat_context)
        x = g - Series.one(rat_context)
        assert g.ln().exp() == g
        assert x.exp().ln() == x

    def test_exp_needs_rationals(self, int_context):
        with pytest.raises(CoefficientDomainError):
            Series.generator(int_context, 1).exp()

    def test_half_power_squares_back(self, rat_context):
        g = one_plus(rat_context, 1) * one_plus(rat_context, 2)
        root = g.power(Fraction(1, 2))
        assert root * root == g
        assert root.coefficient((1, 1)) == Fraction(-1, 8)
        assert not root.is_integral()

    @pytest.mark.parametrize("seed", [0, 1])
    def test_power_laws(self, rat_context, seed):
        rng = random.Random(seed)
        g = random_series(rng, rat_context)
        s, t = Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert g.power(s).power(t) == g.power(s * t)
        assert g.power(s) * g.power(t) == g.power(s + t)
        assert g.power(3) == g * g * g
        assert g.power(-1) == g.inverse()

    def test_integer_powers_over_integers(self, int_context):
        g = one_plus(int_context, 2)
        assert g.power(2) == g * g
        assert g.power(Fraction(3)) == g * g * g
        with pytest.raises(CoefficientDomainError):
            g.power(Fraction(1, 2))

    @pytest.mark.parametrize("t", [-1, -2, Fraction(-3)])
    def test_negative_powers_over_integers_are_rejected(self, t):
        context = SeriesContext(1, 3, RingTag.integer())
        g = Series(context, {(): 1, (1,): 1})
        with pytest.raises(CoefficientDomainError):
            g.power(t)

    def test_signed_power_inverts_first_over_integers(self, int_context):
        g = one_plus(int_context, 2)
        assert signed_power(g, -2) == g.inverse() * g.inverse()
        assert signed_power(g, 2) == g * g

    def test_group_commutator(self, rat_context):
        a, b = one_plus(rat_context, 1), one_plus(rat_context, 2)
        c = group_commutator(a, b)
        assert c.constant_term() == 1
        assert c.homogeneous_component(1).is_zero()
        assert c.homogeneous_component(2) == lie_bracket(
            Series.generator(rat_context, 1), Series.generator(rat_context, 2)
        )

    @pytest.mark.parametrize("k, m", [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (2, 3)])
    def test_group_commutator_leading_term(self, k, m):
        context = SeriesContext(2, 5, RingTag.rational())
        rng = random.Random(10 * k + m)
        p, q = homogeneous(rng, context, k), homogeneous(rng, context, m)
        s, t = random_series(rng, context), random_series(rng, context)
        g = Series.one(context) + p + s - s.truncate(k)
        h = Series.one(context) + q + t - t.truncate(m)
        assert group_commutator(g, h).equal_mod(Series.one(context) + lie_bracket(p, q), k + m)


class TestTruncation:
    def test_equal_mod(self, rat_context):
        a = Series(rat_context, {(): 1, (1,): 1, (1, 2, 1): 4})
        b = Series(rat_context, {(): 1, (1,): 1})
        assert a.equal_mod(b, 2)
        assert not a.equal_mod(b, 3)

    def test_restrict_changes_context(self, rat_context):
        g = Series(rat_context, {(1, 1, 1): 1, (1,): 1})
        h = g.restrict(2)
        assert h.max_degree == 2
        assert h.words() == [(1,)]
        with pytest.raises(TruncationError):
            g.restrict(7)

    def test_change_ring(self, int_context):
        g = Series(int_context, {(1,): 3})
        h = g.change_ring(RingTag.padic(3, 5))
        assert h.coefficient((1,)).val == 1

    def test_substitution_is_an_algebra_map(self, rat_context):
        swap = {1: Series.generator(rat_context, 2), 2: Series.generator(rat_context, 1)}
        g = Series(rat_context, {(1, 1, 2): 3, (2,): 1})
        assert g.substitute(swap) == Series(rat_context, {(2, 2, 1): 3, (1,): 1})
