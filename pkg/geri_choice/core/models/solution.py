"""
Solver Data Models.

Configuration of the fixed-point iteration and the structured result of a
rational inattention solve.
"""

from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

from geri_choice.config.settings import SolverDefaults
from geri_choice.core.models.simplex import ProbabilityVector, frozen_array


class SolverConfig(BaseModel):
    """Successive-substitution settings for the unconditional probabilities."""

    model_config = ConfigDict(frozen=True)

    tolerance: float = Field(
        default=SolverDefaults.TOLERANCE, gt=0, description="Sup-norm on p0 updates"
    )
    max_iterations: int = Field(
        default=SolverDefaults.MAX_ITERATIONS, ge=1, description="Iteration cap"
    )
    damping: float = Field(
        default=SolverDefaults.DAMPING,
        gt=0,
        le=1,
        description="Weight on the new iterate (1.0 = plain iteration)",
    )
    prune_threshold: float = Field(
        default=SolverDefaults.PRUNE_THRESHOLD,
        ge=0,
        description="Coordinates below this are set to exact zero",
    )
    support_tolerance: float = Field(
        default=SolverDefaults.SUPPORT_TOLERANCE,
        gt=0,
        description="Max relative change |T(p0)_i / p0_i - 1| on the support",
    )
    n_restarts: int = Field(
        default=SolverDefaults.N_RESTARTS, ge=1, description="Number of starts"
    )
    seed: int = Field(
        default=SolverDefaults.SEED, ge=0, description="Seed for restart points"
    )


class GeriSolution(BaseModel):
    """
    Result of a rational inattention solve.

    Attributes
    ----------
        p0: unconditional choice probabilities.
        conditionals: M x N matrix, row m is p(v_m).
        info_cost: generalized information cost of the conditionals.
        objective: E W(V + log S(p0)).
        consideration_set: positions with p0 above the prune threshold.
        iterations: fixed-point iterations used by the returned start.
        residual: sup-norm fixed-point residual at p0.
        converged: False only for partial results of a failed solve.
        labels: option labels inherited from the problem.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p0: ProbabilityVector
    conditionals: np.ndarray
    info_cost: float
    objective: float
    consideration_set: list[int]
    iterations: int = Field(ge=0)
    residual: float = Field(ge=0)
    converged: bool = True
    labels: list[int] = Field(default_factory=list)

    @field_validator("p0", mode="before")
    def as_probability_vector(cls, v):
        if isinstance(v, ProbabilityVector):
            return v
        return ProbabilityVector(values=v)

    @field_validator("conditionals", mode="before")
    def as_matrix(cls, v):
        return frozen_array(v)

    @model_validator(mode="after")
    def check_shapes(self):
        n = self.p0.n_options
        if self.conditionals.ndim != 2 or self.conditionals.shape[1] != n:
            raise ValueError(f"conditionals must be an M x {n} matrix")
        if np.any(self.conditionals < 0):
            raise ValueError("conditionals must be nonnegative")
        if np.any(np.abs(self.conditionals.sum(axis=1) - 1.0) > 1e-9):
            raise ValueError("every conditional must sum to one")
        if self.info_cost < -1e-12:
            raise ValueError(f"information cost {self.info_cost} is negative")
        if any(not 0 <= i < n for i in self.consideration_set):
            raise ValueError("consideration set refers to unknown options")
        if not self.labels:
            object.__setattr__(self, "labels", list(range(n)))
        elif len(self.labels) != n:
            raise ValueError("labels must name every option")
        return self

    @field_serializer("conditionals")
    def serialize_conditionals(self, conditionals: np.ndarray) -> list[list[float]]:
        return [[float(x) for x in row] for row in conditionals]

    def conditional(self, m: int) -> ProbabilityVector:
        return ProbabilityVector(values=self.conditionals[m])

    @property
    def considered_options(self) -> list[int]:
        """Labels of the options in the consideration set."""
        return [self.labels[i] for i in self.consideration_set]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "p0": [float(x) for x in self.p0.values],
            "conditionals": self.serialize_conditionals(self.conditionals),
            "info_cost": float(self.info_cost),
            "objective": float(self.objective),
            "consideration_set": list(self.consideration_set),
            "iterations": int(self.iterations),
            "residual": float(self.residual),
            "converged": bool(self.converged),
            "labels": list(self.labels),
        }

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> GeriSolution:
        return cls(
            p0=data["p0"],
            conditionals=data["conditionals"],
            info_cost=data["info_cost"],
            objective=data["objective"],
            consideration_set=data["consideration_set"],
            iterations=data["iterations"],
            residual=data["residual"],
            converged=data.get("converged", True),
            labels=data.get("labels", []),
        )
