"""
Shannon Generator.

S is the identity: the entropy is Shannon's and choice probabilities are
multinomial logit.
"""

import numpy as np

from geri_choice.core.logic.kernels import safe_log

from .base import GeneratorStrategy


class ShannonGenerator(GeneratorStrategy):
    """S(q) = q and H(x) = x."""

    @property
    def name(self) -> str:
        return "shannon"

    def log_s(self, q: np.ndarray) -> np.ndarray:
        return safe_log(np.asarray(q, dtype=float))

    def log_h(self, log_x: np.ndarray) -> np.ndarray:
        return np.asarray(log_x, dtype=float)
