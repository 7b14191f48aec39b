import numpy as np
import pytest

from geri_choice.core.exceptions import DimensionMismatch, NegativeEntry
from geri_choice.core.logic.generators import (
    NestedLogitGenerator,
    build_generator,
    choice_probabilities,
    conjugate,
    generalized_entropy,
    h_value,
    s_value,
    surplus,
)
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.simplex import ProbabilityVector


@pytest.fixture
def five_options():
    return GeneratorSpec.nested_logit([[0, 1, 2], [3, 4]], [0.5, 0.5])


@pytest.fixture
def three_options():
    return GeneratorSpec.nested_logit([[0, 1], [2]], [0.5, 0.9])


class TestNestedLogitGenerator:
    def test_factory(self, five_options):
        strategy = build_generator(five_options)
        assert isinstance(strategy, NestedLogitGenerator)
        assert strategy.n_options == 5

    def test_s_value_by_hand(self, three_options):
        q = ProbabilityVector(values=[0.2, 0.3, 0.5])
        expected = [np.sqrt(0.10), np.sqrt(0.15), 0.5]
        np.testing.assert_allclose(s_value(three_options, q), expected, atol=1e-12)

    def test_s_value_zero_exactly_off_support(self, three_options):
        s = s_value(three_options, ProbabilityVector(values=[1.0, 0.0, 0.0]))
        assert s[1] == 0.0
        assert s[2] == 0.0
        assert s[0] == pytest.approx(1.0)

    def test_h_value_by_hand(self):
        spec = GeneratorSpec.nested_logit([[0, 1]], [0.5])
        np.testing.assert_allclose(h_value(spec, [1.0, 1.0]), [2**-0.5, 2**-0.5])

    def test_h_inverts_s(self, five_options):
        rng = np.random.default_rng(11)
        for _ in range(20):
            q = ProbabilityVector(values=rng.dirichlet(np.ones(5)))
            recovered = h_value(five_options, s_value(five_options, q))
            np.testing.assert_allclose(recovered, q.values, atol=1e-10)

    def test_h_rejects_negative(self, three_options):
        with pytest.raises(NegativeEntry):
            h_value(three_options, [1.0, -1.0, 0.5])

    def test_dimension_mismatch(self, five_options):
        with pytest.raises(DimensionMismatch):
            choice_probabilities(five_options, [0.0, 0.0])

    def test_choice_probabilities_at_zero_payoffs(self, five_options):
        q = choice_probabilities(five_options, np.zeros(5)).values
        share_big = np.sqrt(3) / (np.sqrt(3) + np.sqrt(2))
        assert q[:3].sum() == pytest.approx(share_big, abs=1e-12)
        np.testing.assert_allclose(q[:3], share_big / 3, atol=1e-12)
        np.testing.assert_allclose(q[3:], (1 - share_big) / 2, atol=1e-12)
        assert q[0] == pytest.approx(0.18350, abs=1e-5)
        assert q[3] == pytest.approx(0.22474, abs=1e-5)

    def test_zeta_one_reduces_to_logit(self):
        nested = GeneratorSpec.nested_logit([[0, 1], [2, 3]], [1.0, 1.0])
        shannon = GeneratorSpec.shannon()
        rng = np.random.default_rng(5)
        for _ in range(10):
            v = rng.normal(size=4)
            np.testing.assert_allclose(
                choice_probabilities(nested, v).values,
                choice_probabilities(shannon, v).values,
                atol=1e-12,
            )
            assert surplus(nested, v) == pytest.approx(surplus(shannon, v), abs=1e-12)

    def test_minus_infinity_option_is_never_chosen(self, three_options):
        q = choice_probabilities(three_options, [1.0, -np.inf, 0.5]).values
        assert q[1] == 0.0
        assert q.sum() == pytest.approx(1.0)

    def test_surplus_closed_form(self, three_options):
        v = np.array([0.4, -0.3, 1.1])
        nest_one = 0.5 * np.log(np.exp(0.4 / 0.5) + np.exp(-0.3 / 0.5))
        nest_two = 1.1
        expected = np.log(np.exp(nest_one) + np.exp(nest_two))
        assert surplus(three_options, v) == pytest.approx(expected, abs=1e-12)

    def test_entropy_decomposition(self, five_options):
        strategy = build_generator(five_options)
        rng = np.random.default_rng(2)
        q = rng.dirichlet(np.ones(5), size=25)
        q[0] = [0.5, 0.0, 0.0, 0.5, 0.0]
        np.testing.assert_allclose(
            strategy.entropy(q), strategy.entropy_decomposition(q), atol=1e-12
        )

    def test_conjugate_is_negative_entropy(self, five_options):
        q = ProbabilityVector(values=[0.1, 0.2, 0.3, 0.25, 0.15])
        assert conjugate(five_options, q) == pytest.approx(
            -generalized_entropy(five_options, q), abs=1e-15
        )

    def test_extreme_payoffs_stay_finite(self, five_options):
        q = choice_probabilities(five_options, [800.0, -800.0, 0.0, 750.0, 1.0]).values
        assert np.all(np.isfinite(q))
        assert q.sum() == pytest.approx(1.0)
