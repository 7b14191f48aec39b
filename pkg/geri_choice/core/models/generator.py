"""
Generator Specification Models.

Defines which generalized-entropy generator S is in use: the identity
(Shannon entropy, multinomial logit) or the nested logit generator with a
partition of the options into nests and one parameter zeta per nest.
"""

from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from geri_choice.config.enums import GeneratorKind
from geri_choice.config.settings import NumericTolerances
from geri_choice.core.exceptions import InvalidProblem, InvalidZeta


def validate_nests(nests: list[list[int]], zeta: list[float]) -> None:
    """Raises when the nests do not partition 0..N-1 or a zeta is out of range."""
    if not nests:
        raise InvalidProblem("at least one nest is required")
    if len(nests) != len(zeta):
        raise InvalidProblem(f"{len(nests)} nests but {len(zeta)} zeta values")
    if any(len(nest) == 0 for nest in nests):
        raise InvalidProblem("nests must partition 0..N-1 (empty nest)")

    members = [i for nest in nests for i in nest]
    if sorted(members) != list(range(len(members))):
        raise InvalidProblem("nests must partition 0..N-1")

    for g, z in enumerate(zeta):
        if not (NumericTolerances.ZETA_FLOOR <= z <= 1.0):
            raise InvalidZeta(f"zeta[{g}] = {z} must lie in (0, 1]")


class NestStructure(BaseModel):
    """Mutually exclusive nests of options and their zeta parameters."""

    model_config = ConfigDict(frozen=True)

    nests: list[list[int]] = Field(description="Zero-based option indices per nest")
    zeta: list[float] = Field(description="Nest parameter in (0, 1]")

    @model_validator(mode="after")
    def check_partition(self):
        validate_nests(self.nests, self.zeta)
        return self

    @property
    def n_options(self) -> int:
        return sum(len(nest) for nest in self.nests)

    @property
    def nest_of(self) -> np.ndarray:
        """Nest id of every option."""
        out = np.empty(self.n_options, dtype=int)
        for g, nest in enumerate(self.nests):
            out[nest] = g
        return out

    @property
    def zeta_of(self) -> np.ndarray:
        """Zeta of every option's nest."""
        return np.asarray(self.zeta, dtype=float)[self.nest_of]

    def restrict(self, positions: list[int]) -> NestStructure:
        """Drops unlisted options, reindexes the rest and drops empty nests."""
        new_index = {old: new for new, old in enumerate(positions)}
        nests, zeta = [], []
        for nest, z in zip(self.nests, self.zeta, strict=True):
            kept = [new_index[i] for i in nest if i in new_index]
            if kept:
                nests.append(kept)
                zeta.append(z)
        return NestStructure(nests=nests, zeta=zeta)


class GeneratorSpec(BaseModel):
    """A generalized-entropy generator; ``structure`` is set for nested logit."""

    model_config = ConfigDict(frozen=True)

    kind: GeneratorKind = Field(default=GeneratorKind.SHANNON)
    structure: NestStructure | None = Field(default=None)

    @model_validator(mode="after")
    def check_structure(self):
        if self.kind == GeneratorKind.NESTED_LOGIT and self.structure is None:
            raise ValueError("nested_logit generators need nests and zeta")
        if self.kind == GeneratorKind.SHANNON and self.structure is not None:
            raise ValueError("shannon generators take no nests")
        return self

    @classmethod
    def shannon(cls) -> GeneratorSpec:
        return cls(kind=GeneratorKind.SHANNON)

    @classmethod
    def nested_logit(cls, nests: list[list[int]], zeta: list[float]) -> GeneratorSpec:
        """Builds a nested logit spec, raising the named domain errors."""
        nests = [[int(i) for i in nest] for nest in nests]
        zeta = [float(z) for z in zeta]
        validate_nests(nests, zeta)
        return cls(
            kind=GeneratorKind.NESTED_LOGIT,
            structure=NestStructure(nests=nests, zeta=zeta),
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GeneratorSpec:
        """Parses ``{"kind": "shannon"}`` or the nested logit JSON object."""
        try:
            kind = GeneratorKind(data.get("kind"))
        except ValueError as err:
            kind_name = data.get("kind")
            raise InvalidProblem(f"unknown generator kind {kind_name!r}") from err
        if kind == GeneratorKind.SHANNON:
            return cls.shannon()
        if "nests" not in data or "zeta" not in data:
            raise InvalidProblem("nested_logit generators need nests and zeta")
        return cls.nested_logit(data["nests"], data["zeta"])

    def to_dict(self) -> dict[str, Any]:
        if self.structure is None:
            return {"kind": self.kind.value}
        return {
            "kind": self.kind.value,
            "nests": [list(nest) for nest in self.structure.nests],
            "zeta": list(self.structure.zeta),
        }

    @property
    def n_options(self) -> int | None:
        """Number of options the generator is defined on (None: any)."""
        return None if self.structure is None else self.structure.n_options

    def restrict(self, positions: list[int]) -> GeneratorSpec:
        """Generator for the sub-problem that keeps only ``positions``."""
        if self.structure is None:
            return self
        return GeneratorSpec(
            kind=self.kind, structure=self.structure.restrict(positions)
        )
