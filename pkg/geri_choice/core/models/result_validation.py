"""
Diagnostic Result Models.

A report carries the decision (``is_valid``) and the reasoning chain: one
message per check, prefixed "[SUCCESS]" or "[ERROR]".
"""

from pydantic import BaseModel, Field


class CheckOutcome(BaseModel):
    """Largest violation observed by one numerical check."""

    name: str
    max_violation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_violation <= self.tolerance

    @property
    def message(self) -> str:
        tag = "[SUCCESS]" if self.passed else "[ERROR]"
        return (
            f"{tag} ({self.name}) max violation {self.max_violation:.3e} "
            f"(tolerance {self.tolerance:.1e})"
        )


class DiagnosticReport(BaseModel):
    """
    Attributes
    ----------
        is_valid: no check failed and nothing was flagged.
        reasoning: one message per check or finding.
        outcomes: per-check violations, for numerical suites.
        flagged: option label -> offending value, for option-level findings.
    """

    is_valid: bool
    reasoning: list[str] = Field(default_factory=list)
    outcomes: list[CheckOutcome] = Field(default_factory=list)
    flagged: dict[int, float] = Field(default_factory=dict)
