import random
from fractions import Fraction
from itertools import product

import pytest

from procompletion.domain.entities.coefficients import RingTag
from procompletion.domain.entities.series import Series, SeriesContext
from procompletion.domain.entities.tensor import TensorSeries
from procompletion.domain.services.coproduct import (
    brute_force_quasi_shuffle,
    delta_std,
    delta_twisted,
    gamma,
    gamma_inv,
    grouplike_violation,
    is_grouplike,
    is_primitive,
    map_tensor,
    quasi_shuffle_targets,
    shuffle_targets,
    tricolorings,
    twisted_power_coefficient,
    unshuffles,
)
from procompletion.domain.services.group import magnus_embed
from procompletion.domain.services.lie import compose_lie
from procompletion.shared.config.constants import Coproduct
from procompletion.shared.exceptions import CoefficientDomainError, PreconditionError

from conftest import random_coordinates, random_group_word, random_series


@pytest.fixture
def context():
    return SeriesContext(2, 5, RingTag.rational())


class TestExpansions:
    def test_unshuffles_of_two_letters(self):
        assert unshuffles((1, 2)) == {
            ((1, 2), ()): 1,
            ((1,), (2,)): 1,
            ((2,), (1,)): 1,
            ((), (1, 2)): 1,
        }

    def test_tricolorings_count(self):
        assert sum(tricolorings((1, 2, 1)).values()) == 27
        assert tricolorings((1,)) == {((), (1,)): 1, ((1,), ()): 1, ((1,), (1,)): 1}

    def test_twisted_coefficient_closed_form(self):
        context = SeriesContext(1, 8, RingTag.integer())
        for m in range(1, 5):
            image = delta_twisted(Series.monomial(context, (1,) * m))
            for a in range(m + 1):
                for b in range(m + 1):
                    if a + b > 8:
                        continue
                    assert image.coefficient((1,) * a, (1,) * b) == twisted_power_coefficient(m, a, b)

    def test_quasi_shuffle_small_case(self):
        assert quasi_shuffle_targets((1,), (2,)) == {(1, 2): 1, (2, 1): 1}
        assert quasi_shuffle_targets((1,), (1,)) == {(1, 1): 2, (1,): 1}

    @pytest.mark.parametrize(
        "alpha, beta",
        [((1,), (1, 2)), ((1, 2), (2, 1)), ((1, 1), (1,)), ((2, 1, 2), (1, 2))],
    )
    def test_quasi_shuffle_matches_tricolorings(self, alpha, beta):
        assert quasi_shuffle_targets(alpha, beta) == brute_force_quasi_shuffle(alpha, beta)

    def test_shuffle_drops_the_contraction(self):
        assert shuffle_targets((1,), (1,)) == {(1, 1): 2}
        assert sum(shuffle_targets((1, 2), (1, 2, 2)).values()) == 10


class TestGrouplike:
    @pytest.mark.parametrize("seed", range(10))
    def test_magnus_images_are_grouplike(self, seed):
        rng = random.Random(seed)
        context = SeriesContext(2, 6, RingTag.integer())
        for _ in range(5):
            g = magnus_embed(context, random_group_word(rng, 2, 8))
            assert is_grouplike(g, Coproduct.TWISTED)
            assert delta_twisted(g) == TensorSeries.outer(g, g)

    def test_one_plus_mixed_term_fails_at_first_pair(self, context):
        g = Series(context, {(): 1, (1, 2): 1})
        violation = grouplike_violation(g)
        assert violation is not None
        assert (violation.alpha, violation.beta) == ((1,), (2,))
        assert violation.lhs == 0
        assert violation.rhs == 1

    def test_exp_of_generator_is_standard_grouplike(self, context):
        g = Series.generator(context, 1).exp()
        assert is_grouplike(g, Coproduct.STANDARD)
        assert not is_grouplike(g, Coproduct.TWISTED)
        assert delta_std(g) == TensorSeries.outer(g, g)

    @pytest.mark.parametrize("seed", range(20))
    def test_corrupted_images_fail(self, seed):
        rng = random.Random(seed)
        context = SeriesContext(2, 5, RingTag.integer())
        g = magnus_embed(context, random_group_word(rng, 2, 6))
        word = tuple(rng.randint(1, 2) for _ in range(rng.randint(2, 5)))
        corrupted = g + Series.monomial(context, word, rng.choice((1, -1, 2)))
        assert not is_grouplike(corrupted)

    def test_needs_unit_constant(self, context):
        with pytest.raises(PreconditionError):
            grouplike_violation(Series.zero(context))


class TestPrimitive:
    @pytest.mark.parametrize("seed", range(10))
    def test_lie_combinations_are_primitive(self, context, seed):
        rng = random.Random(seed)
        for _ in range(5):
            z = compose_lie(context, random_coordinates(rng, 2, 5))
            assert is_primitive(z)

    @pytest.mark.parametrize("seed", range(20))
    def test_corrupted_lie_elements_fail(self, context, seed):
        rng = random.Random(seed)
        z = compose_lie(context, random_coordinates(rng, 2, 5))
        word = tuple(rng.randint(1, 2) for _ in range(rng.randint(2, 5)))
        assert not is_primitive(z + Series.monomial(context, word, 1))

    def test_constant_term_is_rejected(self, context):
        with pytest.raises(PreconditionError):
            is_primitive(Series.one(context))

    def test_squares_of_generators_are_not_primitive(self, context):
        x = Series.generator(context, 1)
        assert is_primitive(x)
        assert not is_primitive(x * x)


class TestGamma:
    def test_gamma_sends_exp_to_magnus(self, context):
        x = Series.generator(context, 1)
        assert gamma(x.exp()) == Series.one(context) + x

    def test_gamma_inverse(self, context):
        g = random_series(random.Random(7), context)
        assert gamma_inv(gamma(g)) == g
        assert gamma(gamma_inv(g)) == g

    def test_gamma_needs_rationals(self):
        context = SeriesContext(2, 3, RingTag.integer())
        with pytest.raises(CoefficientDomainError):
            gamma(Series.one(context))

    @pytest.mark.parametrize("seed", range(20))
    def test_twisted_coproduct_is_conjugate_of_standard(self, context, seed):
        g = random_series(random.Random(seed), context)
        assert delta_twisted(g) == map_tensor(delta_std(gamma_inv(g)), gamma)

    @pytest.mark.parametrize("seed", range(20))
    def test_gamma_commutes_with_powers(self, context, seed):
        rng = random.Random(seed)
        z = compose_lie(context, random_coordinates(rng, 2, 3))
        g = z.exp()
        t = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        assert is_grouplike(g, Coproduct.STANDARD)
        assert gamma(g.power(t)) == gamma(g).power(t)

    @pytest.mark.parametrize("seed", range(5))
    def test_gamma_moves_grouplikes_between_coproducts(self, context, seed):
        rng = random.Random(seed)
        g = compose_lie(context, random_coordinates(rng, 2, 4)).exp()
        assert is_grouplike(gamma(g), Coproduct.TWISTED)
        h = magnus_embed(context, random_group_word(rng, 2, 6))
        assert is_grouplike(gamma_inv(h), Coproduct.STANDARD)


class TestCoproductMaps:
    @pytest.mark.parametrize("seed", range(5))
    def test_coproducts_are_algebra_maps(self, rat_context, seed):
        rng = random.Random(seed)
        g, h = random_series(rng, rat_context), random_series(rng, rat_context)
        assert delta_std(g * h) == delta_std(g) * delta_std(h)
        assert delta_twisted(g * h) == delta_twisted(g) * delta_twisted(h)

    def test_coproducts_agree_in_top_degree(self, rat_context):
        for k in range(1, rat_context.max_degree + 1):
            for word in product((1, 2), repeat=k):
                monomial = Series.monomial(rat_context, word)
                gap = delta_twisted(monomial) - delta_std(monomial)
                assert gap.total_degree_part(k).is_zero()
                assert all(len(left) + len(right) > k for (left, right), _ in gap.terms())

    @pytest.mark.parametrize("seed", range(5))
    def test_ln_of_grouplike_is_primitive(self, context, seed):
        rng = random.Random(seed)
        g = compose_lie(context, random_coordinates(rng, 2, 5)).exp()
        assert is_grouplike(g, Coproduct.STANDARD)
        assert is_primitive(g.ln())
        h = magnus_embed(context, random_group_word(rng, 2, 6))
        assert is_primitive(gamma_inv(h).ln())
