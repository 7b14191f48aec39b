"""
Experiment Data Models.

Monte Carlo design for the five-option comparison and the per-option summary
of conditional choice probabilities it produces.
"""

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, model_validator

from geri_choice.config.settings import ExperimentDefaults
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.solution import GeriSolution, SolverConfig


class MonteCarloConfig(BaseModel):
    """Valuations drawn i.i.d. Uniform(0, 1) per option and state."""

    n_options: int = Field(default=ExperimentDefaults.N_OPTIONS, ge=1)
    n_states: int = Field(
        default=ExperimentDefaults.N_STATES, ge=2, description="Draws per replication"
    )
    n_replications: int = Field(
        default=ExperimentDefaults.N_REPLICATIONS,
        ge=1,
        description="Independent repetitions for standard errors",
    )
    seed: int = Field(default=ExperimentDefaults.SEED, ge=0)
    generator: GeneratorSpec = Field(default_factory=GeneratorSpec.shannon)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    threads: int = Field(default=1, ge=1, description="Parallel replications")
    symmetrize: bool = Field(
        default=True,
        description="Repeat each draw under the nest-preserving rotations",
    )
    payoff_scale: float = Field(
        default=1.0, gt=0, description="Valuations are Uniform(0, payoff_scale)"
    )

    @model_validator(mode="after")
    def check_generator_size(self):
        n = self.generator.n_options
        if n is not None and n != self.n_options:
            raise ValueError(f"generator has {n} options, design has {self.n_options}")
        return self


class SummaryStats(BaseModel):
    """
    Per-option statistics of conditional choice probabilities across states,
    averaged over replications, with Monte Carlo standard errors.
    """

    avg: list[float]
    median: list[float]
    std: list[float]
    efficiency: float = Field(description="Probability of choosing the best option")
    avg_se: list[float] = Field(default_factory=list)
    efficiency_se: float = 0.0
    n_states: int = 1
    n_solved_states: int = Field(default=1, description="States in each solve")
    n_replications: int = 1
    payoff_scale: float = 1.0
    seed: int | None = None

    @model_validator(mode="after")
    def check_stats(self):
        n = len(self.avg)
        if len(self.median) != n or len(self.std) != n:
            raise ValueError("avg, median and std must cover the same options")
        if abs(sum(self.avg) - 1.0) > 1e-9:
            raise ValueError(f"average probabilities sum to {sum(self.avg)!r}")
        if not 0.0 <= self.efficiency <= 1.0 + 1e-12:
            raise ValueError(f"efficiency {self.efficiency} outside [0, 1]")
        return self

    def to_frame(self) -> pd.DataFrame:
        """One row per option, options labelled 1..N."""
        n = len(self.avg)
        return pd.DataFrame(
            {
                "option": np.arange(1, n + 1),
                "avg": self.avg,
                "median": self.median,
                "std": self.std,
                "avg_se": self.avg_se or [0.0] * n,
            }
        )


class AppendixColumn(BaseModel):
    """One column of the consideration-set example: a model on a choice set."""

    model: str
    choice_set: list[int]
    solution: GeriSolution
