"""
Model File Reader.
Loads a generator, a finite choice problem and solver overrides from a JSON
model file. Errors name the offending field, e.g. ``prior`` or
``states[1][2]``.

    {
      "generator": {
          "kind": "nested_logit", "nests": [[0, 1], [2, 3]], "zeta": [0.7, 0.8]
      },
      "states": [[2, 1, 3, 2], [3, 2, 1, "-inf"]],
      "prior": [0.5, 0.5],
      "labels": [1, 2, 3, 4],
      "solver": {"tolerance": 1e-10, "max_iterations": 10000}
    }
"""

import json
import math
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from geri_choice.config.logging_config import log as logger
from geri_choice.config.settings import NumericTolerances
from geri_choice.core.exceptions import GeriError, ModelFileError
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.solution import SolverConfig

SOLVER_OVERRIDES = ("tolerance", "max_iterations", "damping", "n_restarts", "seed")


class ModelFile(BaseModel):
    """Raw contents of a model file, before domain validation."""

    model_config = ConfigDict(extra="forbid")

    generator: dict[str, Any]
    states: list[list[Any]]
    prior: list[Any] | None = Field(default=None, description="Equiprobable if omitted")
    labels: list[int] | None = None
    solver: dict[str, Any] = Field(default_factory=dict)


def _read_json(path: Path) -> Any:
    if not path.exists():
        raise ModelFileError(str(path), "file not found")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ModelFileError(
            str(path), f"line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e


def _parse_entry(value: Any, field: str) -> float:
    if value == "-inf":
        return -math.inf
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise ModelFileError(field, f"expected a number or \"-inf\", got {value!r}")
    if math.isnan(value) or math.isinf(value):
        raise ModelFileError(field, f"{value!r} is not allowed")
    return float(value)


def _parse_states(rows: list[list[Any]]) -> list[list[float]]:
    if not rows:
        raise ModelFileError("states", "at least one state is required")
    width = len(rows[0])
    parsed = []
    for m, row in enumerate(rows):
        if len(row) != width:
            raise ModelFileError(
                f"states[{m}]", f"has {len(row)} entries, expected {width}"
            )
        parsed.append([_parse_entry(x, f"states[{m}][{i}]") for i, x in enumerate(row)])
        if all(math.isinf(x) for x in parsed[-1]):
            raise ModelFileError(f"states[{m}]", "every option is -inf")
    return parsed


def _parse_prior(prior: list[Any] | None, n_states: int) -> list[float]:
    if prior is None:
        return [1.0 / n_states] * n_states
    if len(prior) != n_states:
        raise ModelFileError("prior", f"has {len(prior)} entries for {n_states} states")
    values = [_parse_entry(x, f"prior[{m}]") for m, x in enumerate(prior)]
    if any(x < 0 for x in values):
        raise ModelFileError("prior", "entries must be nonnegative")
    total = sum(values)
    if abs(total - 1.0) > NumericTolerances.SIMPLEX_INPUT:
        raise ModelFileError("prior", f"sums to {total:.6g}, not 1")
    return values


def _parse_solver(overrides: dict[str, Any]) -> SolverConfig:
    unknown = sorted(set(overrides) - set(SOLVER_OVERRIDES))
    if unknown:
        raise ModelFileError(f"solver.{unknown[0]}", "unknown solver setting")
    try:
        return SolverConfig(**overrides)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ModelFileError(f"solver.{field}", error["msg"]) from e


def parse_generator(data: Any, field: str = "generator") -> GeneratorSpec:
    if not isinstance(data, dict):
        raise ModelFileError(field, "expected a JSON object")
    try:
        return GeneratorSpec.from_dict(data)
    except (GeriError, ValidationError) as e:
        raise ModelFileError(field, str(e)) from e


def load_model_file(
    path: str | Path,
) -> tuple[GeneratorSpec, FiniteChoiceProblem, SolverConfig]:
    """Parses and validates a model file."""
    path = Path(path)
    raw = _read_json(path)
    if not isinstance(raw, dict):
        raise ModelFileError(str(path), "expected a JSON object at top level")
    try:
        model = ModelFile(**raw)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise ModelFileError(field, error["msg"]) from e

    generator = parse_generator(model.generator)
    states = _parse_states(model.states)
    prior = _parse_prior(model.prior, len(states))
    solver = _parse_solver(model.solver)

    n_options = len(states[0])
    if generator.n_options is not None and generator.n_options != n_options:
        raise ModelFileError(
            "generator.nests",
            f"cover {generator.n_options} options, states have {n_options}",
        )
    try:
        problem = FiniteChoiceProblem(
            states=states, prior=prior, labels=model.labels or []
        )
    except ValidationError as e:
        field = "labels" if "labels" in str(e) else "states"
        raise ModelFileError(field, e.errors()[0]["msg"]) from e

    logger.info(
        f"Loaded {path.name}: {problem.n_states} states, {problem.n_options} options, "
        f"generator {generator.kind.value}"
    )
    return generator, problem, solver


def load_generator_spec(path: str | Path) -> GeneratorSpec:
    """Reads a bare generator JSON object (as accepted by ``verify``)."""
    return parse_generator(_read_json(Path(path)), field="generator")
