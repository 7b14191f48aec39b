from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

from geri_choice.core.knowledge_base.rules import GeneratorRule, TrialPoints
from geri_choice.core.models.result_validation import DiagnosticReport

if TYPE_CHECKING:
    from geri_choice.core.logic.generators.base import GeneratorStrategy

"""Diagnostic engine for generator checks.

This module exposes the `DiagnosticEngine` class which receives a collection
of rule functions. Each rule receives a generator strategy and the trial
points and returns a `CheckOutcome`. The engine executes the rules in order
and builds the reasoning chain from their messages.
"""


class DiagnosticEngine:
    """Simple rule-based check runner.

    Args:
        rules: Iterable of callables with the signature
            (GeneratorStrategy, TrialPoints) -> CheckOutcome.
    """

    def __init__(self, rules: Iterable[GeneratorRule]):
        self.rules = list(rules)

    def evaluate(
        self, generator: GeneratorStrategy, points: TrialPoints
    ) -> DiagnosticReport:
        """Applies every rule and returns the `DiagnosticReport`.

        The report is valid when no message starts with "[ERROR]".
        """
        outcomes = [rule(generator, points) for rule in self.rules]
        reasoning = [outcome.message for outcome in outcomes]
        is_valid = all(not message.startswith("[ERROR]") for message in reasoning)

        return DiagnosticReport(
            is_valid=is_valid, reasoning=reasoning, outcomes=outcomes
        )
