"""
Consideration-Set Example.
Four options, three equally likely states. Solving on the choice sets
{1, 2, 3} and {1, 2, 3, 4} shows that adding option 4 can raise the
probability of option 3, a violation of regularity that rational
inattention allows.
"""

from geri_choice.config.logging_config import log as logger
from geri_choice.config.settings import AppendixExample
from geri_choice.core.exceptions import DimensionMismatch, InvalidChoiceSet
from geri_choice.core.logic.geri import solve_fixed_point
from geri_choice.core.models.experiment import AppendixColumn
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.result_validation import DiagnosticReport
from geri_choice.core.models.solution import GeriSolution, SolverConfig

REGULARITY_TOLERANCE = 1e-6


def appendix_problem() -> FiniteChoiceProblem:
    return FiniteChoiceProblem.equiprobable(
        AppendixExample.STATES, labels=list(AppendixExample.LABELS)
    )


def appendix_generators() -> dict[str, GeneratorSpec]:
    """The two models compared in the example, keyed by display name."""
    return {
        "shannon": GeneratorSpec.shannon(),
        "nested_logit": GeneratorSpec.nested_logit(
            AppendixExample.NESTS, AppendixExample.ZETA
        ),
    }


def run_appendix_example(
    generator: GeneratorSpec,
    choice_set: list[int],
    solver: SolverConfig | None = None,
) -> GeriSolution:
    """
    Solves the example restricted to ``choice_set`` (1-based labels).

    A nested generator is given on all four options and is restricted along
    with the problem.
    """
    allowed = [sorted(labels) for labels in AppendixExample.CHOICE_SETS]
    if sorted(choice_set) not in allowed:
        raise InvalidChoiceSet(
            f"choice set {sorted(choice_set)} must be one of {allowed}"
        )

    problem = appendix_problem()
    labels = sorted(choice_set)
    positions = problem.positions_of(labels)
    sub_problem = problem.restrict(labels)
    sub_generator = generator.restrict(positions)

    solution = solve_fixed_point(sub_generator, sub_problem, solver)
    logger.info(
        f"{generator.kind.value} on {labels}: "
        f"p0 = {solution.p0.values.round(4).tolist()}, "
        f"objective {solution.objective:.4f}"
    )
    return solution


def run_appendix_table(solver: SolverConfig | None = None) -> list[AppendixColumn]:
    """Every model on every choice set, in display order."""
    return [
        AppendixColumn(
            model=name,
            choice_set=list(choice_set),
            solution=run_appendix_example(generator, list(choice_set), solver),
        )
        for name, generator in appendix_generators().items()
        for choice_set in AppendixExample.CHOICE_SETS
    ]


def regularity_check(small: GeriSolution, full: GeriSolution) -> DiagnosticReport:
    """
    Flags options whose unconditional probability rises when the choice set
    grows from ``small`` to ``full``.
    """
    missing = [label for label in small.labels if label not in full.labels]
    if missing:
        raise DimensionMismatch(
            f"options {missing} of the smaller choice set are not in the larger one"
        )

    flagged: dict[int, float] = {}
    reasoning = []
    for position, label in enumerate(small.labels):
        before = float(small.p0.values[position])
        after = float(full.p0.values[full.labels.index(label)])
        if after - before > REGULARITY_TOLERANCE:
            flagged[label] = after - before
            reasoning.append(
                f"[ERROR] option {label}: p0 rises from {before:.4f} to {after:.4f}"
            )

    if not flagged:
        reasoning.append("[SUCCESS] no option gains probability in the larger set")
    return DiagnosticReport(is_valid=not flagged, reasoning=reasoning, flagged=flagged)
