"""
Generator Operations.

Validated, single-vector entry points over the generator strategies. The
strategies themselves work on raw arrays; these functions check inputs and
return domain models.
"""

import numpy as np
from numpy.typing import ArrayLike

from geri_choice.core.exceptions import (
    AllMinusInfinity,
    DimensionMismatch,
    NegativeEntry,
)
from geri_choice.core.logic.kernels import check_extended, safe_log
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.simplex import ProbabilityVector, ValuationVector

from .base import GeneratorStrategy
from .factory import build_generator


def as_valuations(v: ValuationVector | ArrayLike) -> np.ndarray:
    """Extended-real array with at least one finite entry."""
    arr = v.values if isinstance(v, ValuationVector) else check_extended(v)
    if arr.ndim != 1:
        raise DimensionMismatch("valuations must be a 1-D vector")
    if not np.any(np.isfinite(arr)):
        raise AllMinusInfinity("every valuation is -inf")
    return arr


def _strategy(gen: GeneratorSpec, n: int) -> GeneratorStrategy:
    strategy = build_generator(gen)
    strategy.check_dimension(n)
    return strategy


def s_value(gen: GeneratorSpec, q: ProbabilityVector) -> np.ndarray:
    """Generator S(q); zero exactly where q is zero."""
    strategy = _strategy(gen, q.n_options)
    return np.exp(strategy.log_s(q.values))


def h_value(gen: GeneratorSpec, x: ArrayLike) -> np.ndarray:
    """H(x) for nonnegative x; zero coordinates map to zero."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise DimensionMismatch("x must be a 1-D vector")
    if np.any(arr < 0):
        raise NegativeEntry(f"H is defined on nonnegative vectors, got {arr.min()!r}")
    strategy = _strategy(gen, arr.size)
    return np.exp(strategy.log_h(safe_log(arr)))


def surplus(gen: GeneratorSpec, v: ValuationVector | ArrayLike) -> float:
    """W(v) = log sum_i H_i(e^v); -inf entries contribute nothing."""
    arr = as_valuations(v)
    strategy = _strategy(gen, arr.size)
    return float(strategy.log_surplus(arr))


def choice_probabilities(
    gen: GeneratorSpec, v: ValuationVector | ArrayLike
) -> ProbabilityVector:
    """q_i(v) = H_i(e^v) / sum_j H_j(e^v); zero exactly where v_i = -inf."""
    arr = as_valuations(v)
    strategy = _strategy(gen, arr.size)
    q = strategy.choice_matrix(arr)
    return ProbabilityVector(values=q / q.sum())


def generalized_entropy(gen: GeneratorSpec, q: ProbabilityVector) -> float:
    """Omega_S(q) = -q . log S(q)."""
    strategy = _strategy(gen, q.n_options)
    return float(strategy.entropy(q.values))


def conjugate(gen: GeneratorSpec, q: ProbabilityVector) -> float:
    """W*(q) = q . log S(q), the convex conjugate of the surplus on the simplex."""
    strategy = _strategy(gen, q.n_options)
    return float(strategy.conjugate(q.values))
