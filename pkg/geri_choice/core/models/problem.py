"""
Finite Choice Problem Model.

A finite payoff state space with a prior: one valuation vector per state,
stacked as the rows of ``states``.
"""

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

from geri_choice.config.settings import NumericTolerances
from geri_choice.core.models.simplex import (
    ValuationVector,
    encode_extended,
    frozen_array,
)


class FiniteChoiceProblem(BaseModel):
    """
    Attributes
    ----------
        states: M x N matrix of extended-real valuations, one row per state.
        prior: M nonnegative weights summing to one.
        labels: user-facing option labels (defaults to 0..N-1).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    states: np.ndarray = Field(description="Valuations, one row per state")
    prior: np.ndarray = Field(description="Probability of each state")
    labels: list[int] = Field(default_factory=list, description="Option labels")

    @field_validator("states", mode="before")
    def as_matrix(cls, v):
        if not isinstance(v, np.ndarray):
            v = [[float(x) if isinstance(x, str) else x for x in row] for row in v]
        return frozen_array(v)

    @field_validator("prior", mode="before")
    def as_vector(cls, v):
        return np.array(v, dtype=float)

    @model_validator(mode="after")
    def check_problem(self):
        if self.states.ndim != 2 or self.states.shape[0] == 0:
            raise ValueError("states must be a nonempty M x N matrix")
        if self.states.shape[1] == 0:
            raise ValueError("states must have at least one option")
        if np.any(np.isnan(self.states)) or np.any(np.isposinf(self.states)):
            raise ValueError("states must not contain NaN or +inf")
        if not np.all(np.any(np.isfinite(self.states), axis=1)):
            raise ValueError("every state needs at least one finite valuation")

        prior = self.prior
        if prior.ndim != 1 or prior.size != self.states.shape[0]:
            raise ValueError(
                f"prior has {prior.size} entries for {self.states.shape[0]} states"
            )
        if not np.all(np.isfinite(prior)) or np.any(prior < 0):
            raise ValueError("prior must be finite and nonnegative")
        total = float(prior.sum())
        if abs(total - 1.0) > NumericTolerances.SIMPLEX_INPUT:
            raise ValueError(f"prior sums to {total!r}, not 1")
        object.__setattr__(self, "prior", frozen_array(prior / total))

        if not self.labels:
            object.__setattr__(self, "labels", list(range(self.states.shape[1])))
        elif len(self.labels) != self.states.shape[1]:
            raise ValueError("labels must name every option")
        elif len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        return self

    @field_serializer("states")
    def serialize_states(self, states: np.ndarray) -> list[list[float | str]]:
        return [encode_extended(row) for row in states]

    @field_serializer("prior")
    def serialize_prior(self, prior: np.ndarray) -> list[float]:
        return [float(x) for x in prior]

    @classmethod
    def equiprobable(cls, states, labels: list[int] | None = None):
        """Builds a problem whose states are equally likely."""
        n_states = len(states)
        return cls(
            states=states, prior=np.full(n_states, 1.0 / n_states), labels=labels or []
        )

    @property
    def n_options(self) -> int:
        return int(self.states.shape[1])

    @property
    def n_states(self) -> int:
        return int(self.states.shape[0])

    def state(self, m: int) -> ValuationVector:
        return ValuationVector(values=self.states[m])

    def positions_of(self, labels: list[int]) -> list[int]:
        """Maps option labels to column positions."""
        missing = [label for label in labels if label not in self.labels]
        if missing:
            raise ValueError(f"unknown option labels {missing}")
        return [self.labels.index(label) for label in labels]

    def restrict(self, labels: list[int]) -> "FiniteChoiceProblem":
        """Keeps only the listed options, preserving their labels."""
        positions = self.positions_of(labels)
        return FiniteChoiceProblem(
            states=self.states[:, positions], prior=self.prior, labels=list(labels)
        )
