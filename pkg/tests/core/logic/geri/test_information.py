import numpy as np
import pytest

from geri_choice.core.exceptions import (
    AllOptionsExcluded,
    DimensionMismatch,
    StateCountMismatch,
)
from geri_choice.core.logic.geri import (
    conditional_probabilities,
    expected_payoff,
    information_cost,
    information_cost_conjugate,
    optimized_value,
    rational_inattention_objective,
)
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.simplex import ProbabilityVector

SHANNON = GeneratorSpec.shannon()
NESTED = GeneratorSpec.nested_logit([[0, 1], [2]], [0.6, 1.0])


@pytest.fixture
def coin_problem():
    return FiniteChoiceProblem.equiprobable([[1.0, 0.0], [0.0, 1.0]])


def _random_problem(rng, n_states=6, n_options=3):
    prior = rng.dirichlet(np.ones(n_states))
    return FiniteChoiceProblem(states=rng.normal(size=(n_states, n_options)), prior=prior)


class TestInformationCost:
    def test_state_independent_choice_is_free(self):
        problem = FiniteChoiceProblem.equiprobable(np.arange(8.0).reshape(4, 2))
        conditionals = [ProbabilityVector(values=[0.4, 0.6])] * 4
        assert information_cost(SHANNON, problem, conditionals) == pytest.approx(
            0.0, abs=1e-15
        )

    def test_perfect_signal_costs_mutual_information(self, coin_problem):
        conditionals = np.array([[1.0, 0.0], [0.0, 1.0]])
        cost = information_cost(SHANNON, coin_problem, conditionals)
        assert cost == pytest.approx(np.log(2.0), abs=1e-12)

    @pytest.mark.parametrize("gen", [SHANNON, NESTED], ids=["shannon", "nested"])
    def test_random_costs_are_nonnegative(self, gen):
        rng = np.random.default_rng(21)
        for _ in range(20):
            problem = _random_problem(rng)
            conditionals = rng.dirichlet(np.ones(3), size=problem.n_states)
            assert information_cost(gen, problem, conditionals) >= -1e-12

    @pytest.mark.parametrize("gen", [SHANNON, NESTED], ids=["shannon", "nested"])
    def test_conjugate_form_agrees(self, gen):
        rng = np.random.default_rng(4)
        problem = _random_problem(rng)
        conditionals = rng.dirichlet(np.ones(3), size=problem.n_states)
        assert information_cost(gen, problem, conditionals) == pytest.approx(
            information_cost_conjugate(gen, problem, conditionals), abs=1e-12
        )

    @pytest.mark.parametrize("gen", [SHANNON, NESTED], ids=["shannon", "nested"])
    def test_convex_on_fixed_marginals(self, gen):
        """Mixing two conditional sets with the same p0 never raises the cost."""
        rng = np.random.default_rng(13)
        problem = FiniteChoiceProblem.equiprobable(rng.normal(size=(2, 3)))
        first = rng.dirichlet(np.ones(3), size=2)
        # same column averages, different conditionals
        second = first[::-1].copy()
        for rho in rng.uniform(size=10):
            mixed = rho * first + (1 - rho) * second
            lhs = information_cost(gen, problem, mixed)
            rhs = rho * information_cost(gen, problem, first) + (1 - rho) * (
                information_cost(gen, problem, second)
            )
            assert lhs <= rhs + 1e-12

    def test_state_count_mismatch(self, coin_problem):
        with pytest.raises(StateCountMismatch):
            information_cost(SHANNON, coin_problem, np.array([[0.5, 0.5]]))

    def test_option_count_mismatch(self, coin_problem):
        with pytest.raises(DimensionMismatch):
            information_cost(SHANNON, coin_problem, np.full((2, 3), 1 / 3))


class TestConditionalProbabilities:
    def test_uniform_prior_gives_logit(self):
        v = np.array([0.2, 1.0, -0.4])
        p = conditional_probabilities(SHANNON, ProbabilityVector(values=[1 / 3] * 3), v)
        np.testing.assert_allclose(p.values, np.exp(v) / np.exp(v).sum(), atol=1e-12)

    def test_appendix_state(self):
        p0 = ProbabilityVector(values=[0.71, 0.0, 0.29])
        p = conditional_probabilities(SHANNON, p0, [2.0, 1.0, 3.0]).values
        assert p[1] == 0.0
        np.testing.assert_allclose(p, [0.4740, 0.0, 0.5260], atol=1e-3)

    @pytest.mark.parametrize("gen", [SHANNON, NESTED], ids=["shannon", "nested"])
    def test_excluded_option_is_never_chosen(self, gen):
        p0 = ProbabilityVector(values=[0.0, 0.5, 0.5])
        rng = np.random.default_rng(0)
        for _ in range(10):
            assert conditional_probabilities(gen, p0, rng.normal(size=3)).values[0] == 0.0

    def test_no_viable_option(self):
        p0 = ProbabilityVector(values=[1.0, 0.0])
        with pytest.raises(AllOptionsExcluded):
            conditional_probabilities(SHANNON, p0, [-np.inf, 1.0])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            conditional_probabilities(
                SHANNON, ProbabilityVector(values=[0.5, 0.5]), [1.0, 2.0, 3.0]
            )


class TestValues:
    def test_optimized_value_at_degenerate_p0(self, coin_problem):
        value = optimized_value(SHANNON, coin_problem, ProbabilityVector(values=[1.0, 0.0]))
        assert value == pytest.approx(0.5, abs=1e-12)

    def test_objective_is_payoff_minus_cost(self, coin_problem):
        conditionals = np.array([[0.9, 0.1], [0.2, 0.8]])
        payoff = expected_payoff(coin_problem, conditionals)
        assert payoff == pytest.approx(0.85)
        assert rational_inattention_objective(
            SHANNON, coin_problem, conditionals
        ) == pytest.approx(payoff - information_cost(SHANNON, coin_problem, conditionals))

    def test_payoff_ignores_minus_infinity_of_unchosen_options(self):
        problem = FiniteChoiceProblem.equiprobable([[1.0, "-inf"]])
        assert expected_payoff(problem, np.array([[1.0, 0.0]])) == 1.0
