"""
Numeric Kernels.

Simplex validation and max-shifted log-sum-exp over extended reals. Minus
infinity is a legal value everywhere: log 0 = -inf and exp(-inf) = 0.
"""

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import logsumexp

from geri_choice.config.settings import NumericTolerances
from geri_choice.core.exceptions import (
    AllMinusInfinity,
    EmptyVector,
    InvalidProblem,
    NegativeEntry,
    NotNormalized,
)
from geri_choice.core.models.simplex import ProbabilityVector


def validate_simplex(values: ArrayLike | ProbabilityVector) -> ProbabilityVector:
    """
    Checks that ``values`` lie on the simplex and renormalizes round-off.

    Entries down to -1e-12 are treated as zero; the sum may be off by 1e-9.
    """
    if isinstance(values, ProbabilityVector):
        values = values.values
    arr = np.array(values, dtype=float).ravel()
    if arr.size == 0:
        raise EmptyVector("probability vector is empty")
    if not np.all(np.isfinite(arr)):
        raise NegativeEntry("probabilities must be finite")
    if np.any(arr < -NumericTolerances.NEGATIVE_ENTRY):
        raise NegativeEntry(f"negative probability {arr.min()!r}")

    arr = np.clip(arr, 0.0, None)
    total = float(arr.sum())
    if abs(total - 1.0) > NumericTolerances.SIMPLEX_INPUT:
        raise NotNormalized(f"probabilities sum to {total!r}")
    return ProbabilityVector(values=arr / total)


def check_extended(values: ArrayLike) -> np.ndarray:
    """Float array with no NaN or +inf; minus infinity allowed."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise EmptyVector("valuation vector is empty")
    if np.any(np.isnan(arr)) or np.any(np.isposinf(arr)):
        raise InvalidProblem("valuations must not contain NaN or +inf")
    return arr


def log_sum_exp(values: ArrayLike) -> float:
    """log(sum(exp(values))), shifted by the finite maximum; -inf if all -inf."""
    arr = check_extended(values).ravel()
    with np.errstate(divide="ignore"):
        return float(logsumexp(arr))


def log_sum_exp_rows(matrix: np.ndarray) -> np.ndarray:
    """Row-wise log-sum-exp along the last axis."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return logsumexp(matrix, axis=-1)


def softmax_rows(matrix: np.ndarray) -> np.ndarray:
    """Stable softmax along the last axis; -inf entries get exact zeros."""
    matrix = np.asarray(matrix, dtype=float)
    if np.any(np.all(np.isneginf(matrix), axis=-1)):
        raise AllMinusInfinity("every entry of a row is -inf")
    lse = log_sum_exp_rows(matrix)
    return np.exp(matrix - np.expand_dims(lse, -1))


def safe_log(values: np.ndarray) -> np.ndarray:
    """Elementwise log with log 0 = -inf and no warnings."""
    with np.errstate(divide="ignore"):
        return np.log(values)


def xlogy(x: np.ndarray, log_y: np.ndarray) -> np.ndarray:
    """x * log_y with 0 * (-inf) = 0."""
    with np.errstate(invalid="ignore"):
        return np.where(x > 0, x * log_y, 0.0)
