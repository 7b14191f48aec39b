"""
Random Utility Equivalence.

A GERI model with payoffs v and unconditional probabilities p0 chooses like
the additive random utility model with payoffs v + log S(p0); conversely any
random utility model is a GERI model once its payoffs are shifted back by
log S(p0) with p0 = E q(V).
"""

import numpy as np

from geri_choice.core.exceptions import DimensionMismatch, InvalidProblem
from geri_choice.core.logic.generators import build_generator
from geri_choice.core.logic.generators.functions import as_valuations
from geri_choice.core.logic.kernels import validate_simplex
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.simplex import ProbabilityVector, ValuationVector

from .information import shifted_valuations


def to_equivalent_rum(
    gen: GeneratorSpec, p0: ProbabilityVector, v: ValuationVector | np.ndarray
) -> ValuationVector:
    """Random utility payoffs v + log S(p0); -inf where p0 is zero."""
    arr = as_valuations(v)
    if arr.size != p0.n_options:
        raise DimensionMismatch(f"p0 has {p0.n_options} options, v has {arr.size}")
    generator = build_generator(gen)
    generator.check_dimension(arr.size)
    return ValuationVector(values=shifted_valuations(generator, arr, p0.values))


def from_rum(
    gen: GeneratorSpec, rum_problem: FiniteChoiceProblem
) -> tuple[FiniteChoiceProblem, ProbabilityVector]:
    """
    GERI problem whose solution reproduces the random utility choice
    probabilities state by state, together with its p0 = E q(V).
    """
    states = rum_problem.states
    if not np.all(np.isfinite(states)):
        raise InvalidProblem("random utility payoffs must all be finite")
    generator = build_generator(gen)
    try:
        generator.check_dimension(rum_problem.n_options)
    except DimensionMismatch as err:
        raise InvalidProblem(str(err)) from err

    p0 = validate_simplex(rum_problem.prior @ generator.choice_matrix(states))
    if not np.all(p0.values > 0):
        raise InvalidProblem("an option is never chosen; p0 must be interior")

    geri_states = states - generator.log_s(p0.values)
    problem = FiniteChoiceProblem(
        states=geri_states, prior=rum_problem.prior, labels=list(rum_problem.labels)
    )
    return problem, p0
