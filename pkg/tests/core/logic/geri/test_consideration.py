import numpy as np
import pytest

from geri_choice.config.settings import AppendixExample
from geri_choice.core.logic.geri import (
    check_dominance_exclusion,
    check_solution,
    solve_fixed_point,
)
from geri_choice.core.logic.geri.consideration import dominated_pairs, worst_everywhere
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.solution import GeriSolution

SHANNON = GeneratorSpec.shannon()


@pytest.fixture
def appendix():
    return FiniteChoiceProblem.equiprobable(
        AppendixExample.STATES, labels=AppendixExample.LABELS
    )


def _fake_solution(p0, problem):
    conditionals = np.tile(p0, (problem.n_states, 1))
    return GeriSolution(
        p0=p0,
        conditionals=conditionals,
        info_cost=0.0,
        objective=0.0,
        consideration_set=np.flatnonzero(np.asarray(p0) > 0).tolist(),
        iterations=1,
        residual=0.0,
        labels=problem.labels,
    )


class TestDominance:
    def test_worst_everywhere(self):
        problem = FiniteChoiceProblem.equiprobable([[1.0, 0.0, 2.0], [3.0, 1.0, 1.0]])
        assert worst_everywhere(problem) == [1]

    def test_ties_everywhere_are_not_worst(self):
        problem = FiniteChoiceProblem.equiprobable([[1.0, 1.0]])
        assert worst_everywhere(problem) == []

    def test_dominated_pairs_in_appendix(self, appendix):
        assert (1, 0) in dominated_pairs(appendix)
        assert worst_everywhere(appendix) == []

    def test_shannon_appendix_excludes_dominated_option(self, appendix):
        sub = appendix.restrict([1, 2, 3])
        solution = solve_fixed_point(SHANNON, sub)
        assert solution.p0.values[1] == 0.0
        report = check_dominance_exclusion(solution, sub, SHANNON)
        assert report.is_valid
        assert report.flagged == {}

    def test_flags_considered_worst_option(self):
        problem = FiniteChoiceProblem.equiprobable([[1.0, 0.0], [2.0, 1.0]], labels=[7, 8])
        report = check_dominance_exclusion(_fake_solution([0.5, 0.5], problem), problem, SHANNON)
        assert not report.is_valid
        assert report.flagged == {8: 0.5}
        assert report.reasoning[0].startswith("[ERROR]")

    def test_dominated_pair_only_checked_for_shannon(self):
        # option 1 is dominated by option 0 but beats option 2 in the second state
        problem = FiniteChoiceProblem.equiprobable([[2.0, 1.0, 3.0], [3.0, 2.0, 0.0]])
        solution = _fake_solution([0.4, 0.2, 0.4], problem)
        nested = GeneratorSpec.nested_logit([[0, 1], [2]], [0.5, 1.0])
        assert not check_dominance_exclusion(solution, problem, SHANNON).is_valid
        assert check_dominance_exclusion(solution, problem, nested).is_valid

    def test_no_dominated_options_gives_empty_report(self):
        problem = FiniteChoiceProblem.equiprobable([[1.0, 0.0], [0.0, 1.0]])
        report = check_dominance_exclusion(_fake_solution([0.5, 0.5], problem), problem, SHANNON)
        assert report.is_valid
        assert report.reasoning == []


class TestCheckSolution:
    def test_detects_wrong_marginal(self, appendix):
        report = check_solution(
            _fake_solution([0.25, 0.25, 0.25, 0.25], appendix), appendix, SHANNON
        )
        assert not report.is_valid
        assert any("fixed-point residual" in m and m.startswith("[ERROR]") for m in report.reasoning)

    def test_detects_shape_mismatch(self, appendix):
        other = FiniteChoiceProblem.equiprobable([[0.0, 1.0, 2.0, 3.0]])
        report = check_solution(_fake_solution([1.0, 0.0, 0.0, 0.0], other), appendix, SHANNON)
        assert not report.is_valid
        assert len(report.reasoning) == 1
