"""
Vector Data Models.

Immutable probability and valuation vectors. Arrays are stored read-only so a
model instance can be shared freely between callers.
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


def frozen_array(values) -> np.ndarray:
    """Returns a read-only float copy of ``values``."""
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


def encode_extended(values: np.ndarray) -> list[float | str]:
    """JSON has no infinity literal; minus infinity travels as "-inf"."""
    return ["-inf" if np.isneginf(x) else float(x) for x in values]


class ProbabilityVector(BaseModel):
    """
    A point of the unit simplex.

    Zero entries are kept exact; ``support`` marks the strictly positive
    coordinates and ``log_values`` maps zeros to minus infinity.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray = Field(description="Nonnegative entries summing to one")

    @field_validator("values", mode="before")
    def as_array(cls, v):
        return frozen_array(v)

    @model_validator(mode="after")
    def check_simplex(self):
        if self.values.ndim != 1 or self.values.size == 0:
            raise ValueError("probabilities must be a nonempty 1-D vector")
        if not np.all(np.isfinite(self.values)) or np.any(self.values < 0):
            raise ValueError("probabilities must be finite and nonnegative")
        total = float(self.values.sum())
        if abs(total - 1.0) > NumericTolerances.SIMPLEX_INTERNAL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        return self

    @field_serializer("values")
    def serialize_values(self, values: np.ndarray) -> list[float]:
        return [float(x) for x in values]

    @property
    def support(self) -> np.ndarray:
        return self.values > 0

    @property
    def log_values(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(self.values)

    @property
    def n_options(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n_options


class ValuationVector(BaseModel):
    """Payoffs in utility units; minus infinity marks an eliminated option."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray = Field(description="Extended-real payoffs")

    @field_validator("values", mode="before")
    def as_array(cls, v):
        if not isinstance(v, np.ndarray):
            v = [float(x) if isinstance(x, str) else x for x in v]
        return frozen_array(v)

    @model_validator(mode="after")
    def check_extended_reals(self):
        if self.values.ndim != 1 or self.values.size == 0:
            raise ValueError("valuations must be a nonempty 1-D vector")
        if np.any(np.isnan(self.values)) or np.any(np.isposinf(self.values)):
            raise ValueError("valuations must not contain NaN or +inf")
        if not np.any(np.isfinite(self.values)):
            raise ValueError("at least one valuation must be finite")
        return self

    @field_serializer("values")
    def serialize_values(self, values: np.ndarray) -> list[float | str]:
        return encode_extended(values)

    @property
    def n_options(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n_options
