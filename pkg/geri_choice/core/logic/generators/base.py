"""
Base Generator Strategy.

Defines the interface every generalized-entropy generator implements and the
logic shared by all of them: surplus, choice probabilities, entropy and the
convex conjugate. Every method works on the last axis, so a matrix of states
is handled in one call.
"""

from abc import ABC, abstractmethod

import numpy as np

from geri_choice.core.exceptions import DimensionMismatch
from geri_choice.core.logic.kernels import log_sum_exp_rows, softmax_rows, xlogy
from geri_choice.core.models.generator import GeneratorSpec


class GeneratorStrategy(ABC):
    """Abstract Base Class for generator functions S and their inverses H."""

    def __init__(self, spec: GeneratorSpec):
        self.spec = spec

    @property
    @abstractmethod
    def name(self) -> str:
        """Generator name for logging and display."""

    @abstractmethod
    def log_s(self, q: np.ndarray) -> np.ndarray:
        """log S(q) for nonnegative q; -inf exactly where q is zero."""

    @abstractmethod
    def log_h(self, log_x: np.ndarray) -> np.ndarray:
        """log H(exp(log_x)); -inf exactly where log_x is -inf."""

    @property
    def n_options(self) -> int | None:
        return self.spec.n_options

    def check_dimension(self, n: int) -> None:
        if self.n_options is not None and n != self.n_options:
            raise DimensionMismatch(
                f"{self.name} generator has {self.n_options} options, got {n}"
            )

    def log_surplus(self, v: np.ndarray) -> np.ndarray:
        """W(v) = log sum_i H_i(e^v)."""
        return log_sum_exp_rows(self.log_h(v))

    def choice_matrix(self, v: np.ndarray) -> np.ndarray:
        """q_i(v) = H_i(e^v) / sum_j H_j(e^v), normalized in log space."""
        return softmax_rows(self.log_h(v))

    def entropy(self, q: np.ndarray) -> np.ndarray:
        """Omega_S(q) = -sum_i q_i log S_i(q), with 0 log 0 = 0."""
        return -xlogy(q, self.log_s(q)).sum(axis=-1)

    def conjugate(self, q: np.ndarray) -> np.ndarray:
        """W*(q) = q . log S(q) on the simplex."""
        return -self.entropy(q)
