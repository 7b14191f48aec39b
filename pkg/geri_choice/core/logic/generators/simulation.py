"""
Random Utility Simulation.

Draws utilities v_i + eps_i and records which option attains the maximum.
Multinomial logit uses i.i.d. Gumbel(0, 1) shocks; nested logit is sampled
in two stages: the nest by Gumbel-perturbed inclusive values, then the option
within the nest by Gumbel-perturbed v_j / zeta.
"""

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel

from geri_choice.config.enums import GeneratorKind
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.simplex import ValuationVector

from .factory import build_generator
from .functions import as_valuations
from .nested_logit import NestedLogitGenerator

EULER_GAMMA = float(np.euler_gamma)


class SimulationResult(BaseModel):
    """Empirical choice frequencies with binomial standard errors."""

    frequencies: list[float]
    standard_errors: list[float]
    n_draws: int

    def z_scores(self, expected: ArrayLike) -> np.ndarray:
        """(frequency - expected) / standard error, using the expected variance."""
        p = np.asarray(expected, dtype=float)
        se = np.sqrt(p * (1.0 - p) / self.n_draws)
        diff = np.asarray(self.frequencies) - p
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(se > 0, diff / se, np.where(diff == 0, 0.0, np.inf))


def _batches(n_draws: int, batch_size: int):
    done = 0
    while done < n_draws:
        size = min(batch_size, n_draws - done)
        yield size
        done += size


def _draw_choices(
    gen: GeneratorSpec, v: np.ndarray, size: int, rng: np.random.Generator
) -> np.ndarray:
    if gen.kind == GeneratorKind.SHANNON:
        return np.argmax(v + rng.gumbel(size=(size, v.size)), axis=1)

    strategy = build_generator(gen)
    assert isinstance(strategy, NestedLogitGenerator)
    inclusive = strategy.inclusive_values(v)
    nest = np.argmax(inclusive + rng.gumbel(size=(size, inclusive.size)), axis=1)

    nest_of = gen.structure.nest_of
    scaled = v / gen.structure.zeta_of + rng.gumbel(size=(size, v.size))
    scaled = np.where(nest_of[None, :] == nest[:, None], scaled, -np.inf)
    return np.argmax(scaled, axis=1)


def simulate_choice_frequencies(
    gen: GeneratorSpec,
    v: ValuationVector | ArrayLike,
    n_draws: int = 1_000_000,
    seed: int = 0,
    batch_size: int = 200_000,
) -> SimulationResult:
    """Monte Carlo choice frequencies; deterministic for a fixed seed."""
    arr = as_valuations(v)
    build_generator(gen).check_dimension(arr.size)
    rng = np.random.default_rng(seed)

    counts = np.zeros(arr.size)
    for size in _batches(n_draws, batch_size):
        chosen = _draw_choices(gen, arr, size, rng)
        counts += np.bincount(chosen, minlength=arr.size)

    freq = counts / n_draws
    se = np.sqrt(freq * (1.0 - freq) / n_draws)
    return SimulationResult(
        frequencies=freq.tolist(), standard_errors=se.tolist(), n_draws=n_draws
    )


def expected_shock_given_choice(
    gen: GeneratorSpec,
    v: ValuationVector | ArrayLike,
    n_draws: int = 1_000_000,
    seed: int = 0,
    batch_size: int = 200_000,
) -> np.ndarray:
    """
    E[eps_i | i chosen] for mean-zero shocks, to compare against -log S_i(q(v)).
    Only independent Gumbel shocks are sampled, so the generator must be Shannon.
    """
    if gen.kind != GeneratorKind.SHANNON:
        raise ValueError("shock moments are only sampled for the shannon generator")
    arr = as_valuations(v)
    rng = np.random.default_rng(seed)

    totals = np.zeros(arr.size)
    counts = np.zeros(arr.size)
    for size in _batches(n_draws, batch_size):
        shocks = rng.gumbel(size=(size, arr.size)) - EULER_GAMMA
        chosen = np.argmax(arr + shocks, axis=1)
        totals += np.bincount(
            chosen, weights=shocks[np.arange(size), chosen], minlength=arr.size
        )
        counts += np.bincount(chosen, minlength=arr.size)

    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(counts > 0, totals / counts, np.nan)
