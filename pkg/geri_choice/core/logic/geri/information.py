"""
Information Costs and Values.

Generalized information cost kappa_S = Omega_S(E p(V)) - E Omega_S(p(V)),
conditional choice probabilities given an unconditional distribution, and the
optimized value E W(V + log S(p0)). The unit cost of information is 1;
payoffs carry the scale.
"""

import numpy as np

from geri_choice.core.exceptions import (
    AllOptionsExcluded,
    DimensionMismatch,
    StateCountMismatch,
)
from geri_choice.core.logic.generators import GeneratorStrategy, build_generator
from geri_choice.core.logic.generators.functions import as_valuations
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.simplex import ProbabilityVector, ValuationVector


def stack_conditionals(
    problem: FiniteChoiceProblem, conditionals: list[ProbabilityVector] | np.ndarray
) -> np.ndarray:
    """M x N matrix of conditionals, checked against the problem."""
    if isinstance(conditionals, np.ndarray):
        matrix = np.asarray(conditionals, dtype=float)
    else:
        matrix = np.array([c.values for c in conditionals], dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != problem.n_states:
        raise StateCountMismatch(
            f"{matrix.shape[0] if matrix.ndim else 0} conditionals "
            f"for {problem.n_states} states"
        )
    if matrix.shape[1] != problem.n_options:
        raise DimensionMismatch(
            f"conditionals have {matrix.shape[1]} options, "
            f"problem has {problem.n_options}"
        )
    return matrix


def shifted_valuations(
    generator: GeneratorStrategy, states: np.ndarray, p0: np.ndarray
) -> np.ndarray:
    """V + log S(p0); options outside the support of p0 get -inf."""
    log_s = generator.log_s(p0)
    with np.errstate(invalid="ignore"):
        return np.where(np.isneginf(log_s), -np.inf, states + log_s)


def conditional_matrix(
    generator: GeneratorStrategy, states: np.ndarray, p0: np.ndarray
) -> np.ndarray:
    """p(v) = H(e^(v + log S(p0))) / sum_j H_j(.), one row per state."""
    if not np.any(p0 > 0):
        raise AllOptionsExcluded("unconditional probabilities have empty support")
    shifted = shifted_valuations(generator, states, p0)
    blocked = np.all(np.isneginf(shifted), axis=-1)
    if np.any(blocked):
        raise AllOptionsExcluded(
            "no option with positive probability has a finite payoff in state(s) "
            f"{np.flatnonzero(np.atleast_1d(blocked)).tolist()}"
        )
    return generator.choice_matrix(shifted)


def information_cost_matrix(
    generator: GeneratorStrategy, prior: np.ndarray, conditionals: np.ndarray
) -> float:
    p0 = prior @ conditionals
    return float(generator.entropy(p0) - prior @ generator.entropy(conditionals))


def information_cost(
    gen: GeneratorSpec,
    problem: FiniteChoiceProblem,
    conditionals: list[ProbabilityVector] | np.ndarray,
) -> float:
    """
    Generalized information cost of a set of conditionals.

    Zero when the conditionals do not depend on the state, nonnegative
    otherwise by concavity of the entropy.
    """
    generator = build_generator(gen)
    generator.check_dimension(problem.n_options)
    matrix = stack_conditionals(problem, conditionals)
    return information_cost_matrix(generator, problem.prior, matrix)


def information_cost_conjugate(
    gen: GeneratorSpec,
    problem: FiniteChoiceProblem,
    conditionals: list[ProbabilityVector] | np.ndarray,
) -> float:
    """Same cost written with the conjugate: -W*(p0) + E W*(p(V))."""
    generator = build_generator(gen)
    matrix = stack_conditionals(problem, conditionals)
    p0 = problem.prior @ matrix
    return float(
        -generator.conjugate(p0) + problem.prior @ generator.conjugate(matrix)
    )


def conditional_probabilities(
    gen: GeneratorSpec, p0: ProbabilityVector, v: ValuationVector | np.ndarray
) -> ProbabilityVector:
    """Choice probabilities in one state given the unconditional distribution."""
    arr = as_valuations(v)
    if arr.size != p0.n_options:
        raise DimensionMismatch(f"p0 has {p0.n_options} options, v has {arr.size}")
    generator = build_generator(gen)
    generator.check_dimension(arr.size)
    p = conditional_matrix(generator, arr, p0.values)
    return ProbabilityVector(values=p / p.sum())


def optimized_value_matrix(
    generator: GeneratorStrategy,
    states: np.ndarray,
    prior: np.ndarray,
    p0: np.ndarray,
) -> float:
    if not np.any(p0 > 0):
        raise AllOptionsExcluded("unconditional probabilities have empty support")
    surplus = generator.log_surplus(shifted_valuations(generator, states, p0))
    return float(prior @ surplus)


def optimized_value(
    gen: GeneratorSpec, problem: FiniteChoiceProblem, p0: ProbabilityVector
) -> float:
    """E W(V + log S(p0)), the value of the inattention program at p0."""
    if p0.n_options != problem.n_options:
        raise DimensionMismatch(
            f"p0 has {p0.n_options} options, problem has {problem.n_options}"
        )
    generator = build_generator(gen)
    generator.check_dimension(problem.n_options)
    return optimized_value_matrix(generator, problem.states, problem.prior, p0.values)


def expected_payoff(
    problem: FiniteChoiceProblem, conditionals: list[ProbabilityVector] | np.ndarray
) -> float:
    """E[p(V) . V], counting options never chosen as zero."""
    matrix = stack_conditionals(problem, conditionals)
    with np.errstate(invalid="ignore"):
        payoff = np.where(matrix > 0, matrix * problem.states, 0.0).sum(axis=1)
    return float(problem.prior @ payoff)


def rational_inattention_objective(
    gen: GeneratorSpec,
    problem: FiniteChoiceProblem,
    conditionals: list[ProbabilityVector] | np.ndarray,
) -> float:
    """Expected payoff net of the information cost."""
    return expected_payoff(problem, conditionals) - information_cost(
        gen, problem, conditionals
    )


def value_identity_gap(
    gen: GeneratorSpec, problem: FiniteChoiceProblem, solution_p0: ProbabilityVector
) -> float:
    """
    |E W(V + log S(p0)) - (E[p . (V + log S(p0))] - E W*(p))|, which vanishes
    because each p(v) attains the conjugate supremum.
    """
    generator = build_generator(gen)
    shifted = shifted_valuations(generator, problem.states, solution_p0.values)
    p = generator.choice_matrix(shifted)
    payoff = (p * np.where(p > 0, shifted, 0.0)).sum(axis=1)
    dual = float(problem.prior @ (payoff - generator.conjugate(p)))
    return abs(optimized_value(gen, problem, solution_p0) - dual)
