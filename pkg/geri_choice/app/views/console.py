"""
Console Views.
Plain-text rendering of solutions, experiment panels and diagnostic reports.
"""

from geri_choice.core.models.experiment import AppendixColumn, SummaryStats
from geri_choice.core.models.result_validation import DiagnosticReport
from geri_choice.core.models.solution import GeriSolution


def _row(label: str, values: list[float], width: int = 8) -> str:
    return f"{label:<12}" + "".join(f"{x:>{width}.3f}" for x in values)


def render_solution(solution: GeriSolution) -> str:
    status = "converged" if solution.converged else "NOT converged"
    lines = [
        f"GERI solution ({status}, {solution.iterations} iterations, "
        f"residual {solution.residual:.2e})",
        f"{'option':<12}" + "".join(f"{label:>8}" for label in solution.labels),
        _row("p0", solution.p0.values.tolist()),
        f"considered  {solution.considered_options}",
        f"info cost   {solution.info_cost:.4f}",
        f"objective   {solution.objective:.4f}",
    ]
    return "\n".join(lines)


def render_panels(panels: dict[str, SummaryStats]) -> str:
    """Side-by-side comparison of the per-option summaries, one panel per model."""
    blocks = []
    for title, stats in panels.items():
        options = range(1, len(stats.avg) + 1)
        blocks.append(
            "\n".join(
                [
                    title,
                    f"{'option':<12}" + "".join(f"{i:>8}" for i in options),
                    _row("avg", stats.avg),
                    _row("(se)", stats.avg_se or [0.0] * len(stats.avg)),
                    _row("median", stats.median),
                    _row("std", stats.std),
                    f"efficiency  {stats.efficiency:.3f} ({stats.efficiency_se:.3f})",
                ]
            )
        )
    return "\n\n".join(blocks)


def render_appendix(columns: list[AppendixColumn]) -> str:
    labels = sorted({label for c in columns for label in c.solution.labels})
    lines = []
    for column in columns:
        solution = column.solution
        p0 = dict(zip(solution.labels, solution.p0.values, strict=True))
        cells = "".join(
            f"{p0[label]:>8.2f}" if label in p0 else f"{'-':>8}" for label in labels
        )
        choice_set = "{" + ",".join(map(str, column.choice_set)) + "}"
        objective = f"objective {solution.objective:.3f}"
        lines.append(f"{column.model:<14}{choice_set:<11}{cells}   {objective}")
    header = f"{'model':<14}{'set':<11}" + "".join(f"{i:>8}" for i in labels)
    return "\n".join([header, *lines])


def render_report(title: str, report: DiagnosticReport) -> str:
    verdict = "PASS" if report.is_valid else "FAIL"
    return "\n".join([f"{title}: {verdict}", *(f"  {msg}" for msg in report.reasoning)])
