"""
Nested Logit Generator.

S_i(q) = q_i^z (sum_{j in g_i} q_j)^(1 - z) with z the zeta of option i's
nest, and its inverse

    H_i(x) = x_i^(1/z) (sum_{j in g_i} x_j^(1/z))^(z - 1),

obtained by differentiating exp W with W = log sum_g (sum_{j in g} x_j^(1/z_g))^z_g.
All evaluations are done nest by nest in log space with max-shifting.
"""

import numpy as np

from geri_choice.core.logic.kernels import log_sum_exp_rows, safe_log
from geri_choice.core.models.generator import GeneratorSpec

from .base import GeneratorStrategy


class NestedLogitGenerator(GeneratorStrategy):
    """Generator of the nested logit (GEV) model."""

    def __init__(self, spec: GeneratorSpec):
        super().__init__(spec)
        structure = spec.structure
        assert structure is not None
        self.nests = [np.asarray(nest, dtype=int) for nest in structure.nests]
        self.zeta = [float(z) for z in structure.zeta]

    @property
    def name(self) -> str:
        return "nested_logit"

    def log_s(self, q: np.ndarray) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        self.check_dimension(q.shape[-1])
        log_q = safe_log(q)
        out = np.empty_like(log_q)
        for idx, z in zip(self.nests, self.zeta, strict=True):
            members = log_q[..., idx]
            if z == 1.0:
                out[..., idx] = members
                continue
            log_share = safe_log(q[..., idx].sum(axis=-1, keepdims=True))
            with np.errstate(invalid="ignore"):
                out[..., idx] = np.where(
                    np.isneginf(members), -np.inf, z * members + (1.0 - z) * log_share
                )
        return out

    def _inclusive(self, v: np.ndarray, idx: np.ndarray, z: float):
        """Scaled valuations v_j / z and their log-sum-exp within the nest."""
        scaled = v[..., idx] / z
        return scaled, log_sum_exp_rows(scaled)

    def log_h(self, log_x: np.ndarray) -> np.ndarray:
        v = np.asarray(log_x, dtype=float)
        self.check_dimension(v.shape[-1])
        out = np.empty_like(v)
        for idx, z in zip(self.nests, self.zeta, strict=True):
            scaled, lse = self._inclusive(v, idx, z)
            with np.errstate(invalid="ignore"):
                out[..., idx] = np.where(
                    np.isneginf(scaled),
                    -np.inf,
                    scaled + (z - 1.0) * np.expand_dims(lse, -1),
                )
        return out

    def inclusive_values(self, v: np.ndarray) -> np.ndarray:
        """z_g log sum_{j in g} e^(v_j / z_g), one column per nest."""
        v = np.asarray(v, dtype=float)
        self.check_dimension(v.shape[-1])
        columns = []
        for idx, z in zip(self.nests, self.zeta, strict=True):
            _, lse = self._inclusive(v, idx, z)
            columns.append(z * lse)
        return np.stack(columns, axis=-1)

    def log_surplus(self, v: np.ndarray) -> np.ndarray:
        return log_sum_exp_rows(self.inclusive_values(v))

    def entropy_decomposition(self, q: np.ndarray) -> np.ndarray:
        """
        Within-nest plus between-nest form of the entropy:
        -sum_i z_i q_i log q_i - sum_i (1 - z_i) q_i log(sum_{j in g_i} q_j).
        """
        q = np.asarray(q, dtype=float)
        self.check_dimension(q.shape[-1])
        total = np.zeros(q.shape[:-1])
        for idx, z in zip(self.nests, self.zeta, strict=True):
            members = q[..., idx]
            share = members.sum(axis=-1)
            with np.errstate(divide="ignore", invalid="ignore"):
                within = np.where(members > 0, members * np.log(members), 0.0)
                between = np.where(share > 0, share * np.log(share), 0.0)
            total = total - z * within.sum(axis=-1) - (1.0 - z) * between
        return total
