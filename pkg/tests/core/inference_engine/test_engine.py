from unittest.mock import Mock

import numpy as np
import pytest

from geri_choice.core.inference_engine.engine import DiagnosticEngine
from geri_choice.core.knowledge_base.rules import TrialPoints
from geri_choice.core.logic.generators import build_generator
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.result_validation import CheckOutcome


class TestDiagnosticEngine:
    @pytest.fixture
    def generator(self):
        return build_generator(GeneratorSpec.shannon())

    @pytest.fixture
    def points(self):
        return TrialPoints.draw(n_options=3, trials=5, seed=0)

    def test_evaluate_all_rules_pass(self, generator, points):
        """If all rules pass, the result is valid."""
        rule1 = Mock(return_value=CheckOutcome(name="a", max_violation=0.0, tolerance=1e-9))
        rule2 = Mock(return_value=CheckOutcome(name="b", max_violation=1e-12, tolerance=1e-9))

        engine = DiagnosticEngine([rule1, rule2])
        result = engine.evaluate(generator, points)

        assert result.is_valid is True
        assert len(result.reasoning) == 2
        assert result.reasoning[0].startswith("[SUCCESS] (a)")

        rule1.assert_called_with(generator, points)

    def test_evaluate_one_rule_fails(self, generator, points):
        """If one rule fails, the result is invalid."""
        rule1 = Mock(return_value=CheckOutcome(name="a", max_violation=0.0, tolerance=1e-9))
        rule2 = Mock(return_value=CheckOutcome(name="b", max_violation=1.0, tolerance=1e-9))

        engine = DiagnosticEngine([rule1, rule2])
        result = engine.evaluate(generator, points)

        assert result.is_valid is False
        assert result.reasoning[1].startswith("[ERROR] (b)")
        assert [o.name for o in result.outcomes] == ["a", "b"]

    def test_empty_rules(self, generator, points):
        """Without rules the result is valid by default."""
        result = DiagnosticEngine([]).evaluate(generator, points)

        assert result.is_valid is True
        assert result.reasoning == []


def test_outcome_message_reports_violation():
    outcome = CheckOutcome(name="inversion", max_violation=np.float64(2e-3), tolerance=1e-10)
    assert not outcome.passed
    assert "inversion" in outcome.message
    assert "2.000e-03" in outcome.message
