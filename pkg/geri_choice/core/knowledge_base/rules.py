"""Numerical rules a generator must satisfy.

Every rule receives a generator strategy and a shared set of random trial
points and returns a `CheckOutcome` holding its largest violation. The
`DiagnosticEngine` turns the outcomes into a report.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict

from geri_choice.config.settings import NumericTolerances
from geri_choice.core.models.result_validation import CheckOutcome

if TYPE_CHECKING:
    from geri_choice.core.logic.generators.base import GeneratorStrategy

GeneratorRule = Callable[["GeneratorStrategy", "TrialPoints"], CheckOutcome]

STEP = NumericTolerances.FD_STEP


class TrialPoints(BaseModel):
    """Random interior points, scale factors, valuations and pairs."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    q: np.ndarray
    scale: np.ndarray
    v: np.ndarray
    pair_a: np.ndarray
    pair_b: np.ndarray

    @classmethod
    def draw(cls, n_options: int, trials: int, seed: int) -> "TrialPoints":
        rng = np.random.default_rng(seed)
        alpha = np.ones(n_options)
        # mixing with the barycentre keeps every coordinate above 0.5 / N
        q = 0.5 * rng.dirichlet(alpha, size=trials) + 0.5 / n_options
        return cls(
            q=q / q.sum(axis=1, keepdims=True),
            scale=rng.uniform(0.1, 10.0, size=trials),
            v=rng.normal(size=(trials, n_options)),
            pair_a=rng.dirichlet(alpha, size=trials),
            pair_b=rng.dirichlet(alpha, size=trials),
        )


def obtain_generator_rules() -> list[GeneratorRule]:
    """Returns the rules in reporting order."""
    return [
        homogeneity_rule,
        inversion_rule,
        weighted_jacobian_rule,
        surplus_gradient_rule,
        entropy_concavity_rule,
    ]


def homogeneity_rule(generator: GeneratorStrategy, points: TrialPoints) -> CheckOutcome:
    """S(lambda q) = lambda S(q)."""
    lam = points.scale[:, None]
    scaled = np.exp(generator.log_s(lam * points.q))
    expected = lam * np.exp(generator.log_s(points.q))
    return CheckOutcome(
        name="homogeneity",
        max_violation=float(np.max(np.abs(scaled - expected))),
        tolerance=1e-10,
    )


def inversion_rule(generator: GeneratorStrategy, points: TrialPoints) -> CheckOutcome:
    """H(S(q)) = q."""
    recovered = np.exp(generator.log_h(generator.log_s(points.q)))
    return CheckOutcome(
        name="inversion",
        max_violation=float(np.max(np.abs(recovered - points.q))),
        tolerance=1e-10,
    )


def weighted_jacobian_rule(
    generator: GeneratorStrategy, points: TrialPoints
) -> CheckOutcome:
    """sum_i q_i d log S_i / d q_k = 1 for every k, by central differences."""
    q = points.q
    worst = 0.0
    for k in range(q.shape[1]):
        bump = np.zeros(q.shape[1])
        bump[k] = STEP
        upper, lower = generator.log_s(q + bump), generator.log_s(q - bump)
        derivative = (upper - lower) / (2 * STEP)
        weighted = np.sum(q * derivative, axis=1)
        worst = max(worst, float(np.max(np.abs(weighted - 1.0))))
    return CheckOutcome(name="weighted_jacobian", max_violation=worst, tolerance=1e-6)


def surplus_gradient_rule(
    generator: GeneratorStrategy, points: TrialPoints
) -> CheckOutcome:
    """Gradient of W equals the choice probabilities."""
    v = points.v
    probabilities = generator.choice_matrix(v)
    worst = 0.0
    for k in range(v.shape[1]):
        bump = np.zeros(v.shape[1])
        bump[k] = STEP
        derivative = (
            generator.log_surplus(v + bump) - generator.log_surplus(v - bump)
        ) / (2 * STEP)
        worst = max(worst, float(np.max(np.abs(derivative - probabilities[:, k]))))
    return CheckOutcome(name="surplus_gradient", max_violation=worst, tolerance=1e-6)


def entropy_concavity_rule(
    generator: GeneratorStrategy, points: TrialPoints
) -> CheckOutcome:
    """Omega_S((a + b) / 2) >= (Omega_S(a) + Omega_S(b)) / 2."""
    midpoint = generator.entropy(0.5 * (points.pair_a + points.pair_b))
    chord = 0.5 * (generator.entropy(points.pair_a) + generator.entropy(points.pair_b))
    gap = np.clip(chord - midpoint, 0.0, None)
    return CheckOutcome(
        name="entropy_concavity", max_violation=float(np.max(gap)), tolerance=1e-12
    )
