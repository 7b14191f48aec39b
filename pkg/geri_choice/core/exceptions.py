"""
Domain Errors.

Every numeric operation raises one of these; all derive from ``ValueError``
so callers that only care about bad input can catch that.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from geri_choice.core.models.solution import GeriSolution


class GeriError(ValueError):
    """Base class for all domain errors."""


class EmptyVector(GeriError):
    """A vector with no entries was supplied."""


class NegativeEntry(GeriError):
    """A probability or generator argument is negative."""


class NotNormalized(GeriError):
    """Probabilities do not sum to one within tolerance."""


class DimensionMismatch(GeriError):
    """Vector lengths disagree with each other or with the generator."""


class StateCountMismatch(GeriError):
    """The number of conditionals differs from the number of states."""


class AllMinusInfinity(GeriError):
    """Every valuation is minus infinity; no option can be chosen."""


class AllOptionsExcluded(GeriError):
    """The unconditional distribution has empty support."""


class InvalidProblem(GeriError):
    """A choice problem violates its structural invariants."""


class InvalidZeta(GeriError):
    """A nesting parameter lies outside (0, 1]."""


class InvalidChoiceSet(GeriError):
    """A requested choice set is not one the example defines."""


class ModelFileError(GeriError):
    """A model file could not be parsed; ``field`` names the offending path."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class NoConvergence(GeriError):
    """The fixed-point iteration stopped at its iteration cap."""

    def __init__(self, residual: float, iterations: int, solution: GeriSolution):
        self.residual = residual
        self.iterations = iterations
        self.solution = solution
        super().__init__(
            f"Fixed point not reached after {iterations} iterations "
            f"(residual {residual:.3e})"
        )
