"""
Consideration Set Checks.

An option that is weakly worst in every state, and strictly worse than some
option in a state of positive probability, is never considered. Under Shannon
entropy an option dominated by a single other option is never considered
either. The checks below flag solutions that break these rules, and
re-validate the structural invariants of a solution.
"""

import numpy as np

from geri_choice.config.enums import GeneratorKind
from geri_choice.config.logging_config import log as logger
from geri_choice.core.logic.generators import build_generator
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.result_validation import DiagnosticReport
from geri_choice.core.models.solution import GeriSolution, SolverConfig

from .information import conditional_matrix, value_identity_gap


def worst_everywhere(problem: FiniteChoiceProblem) -> list[int]:
    """Positions a with v_a <= v_i for all i in every state, strictly somewhere."""
    states, likely = problem.states, problem.prior > 0
    found = []
    for a in range(problem.n_options):
        others = np.delete(states, a, axis=1)
        if others.shape[1] == 0:
            continue
        weakly = np.all(states[:, [a]] <= others)
        strictly = np.any((states[likely, a][:, None] < others[likely]))
        if weakly and strictly:
            found.append(a)
    return found


def dominated_pairs(problem: FiniteChoiceProblem) -> list[tuple[int, int]]:
    """Pairs (a, d) with v_a <= v_d in every state, strictly in a likely one."""
    states, likely = problem.states, problem.prior > 0
    pairs = []
    for a in range(problem.n_options):
        for d in range(problem.n_options):
            if a == d:
                continue
            if np.all(states[:, a] <= states[:, d]) and np.any(
                states[likely, a] < states[likely, d]
            ):
                pairs.append((a, d))
    return pairs


def check_dominance_exclusion(
    solution: GeriSolution,
    problem: FiniteChoiceProblem,
    gen: GeneratorSpec,
    prune_threshold: float | None = None,
) -> DiagnosticReport:
    """Flags dominated options that the solution still considers."""
    threshold = (
        SolverConfig().prune_threshold if prune_threshold is None else prune_threshold
    )
    p0 = solution.p0.values
    reasoning: list[str] = []
    flagged: dict[int, float] = {}

    for a in worst_everywhere(problem):
        label = problem.labels[a]
        if p0[a] > threshold:
            flagged[label] = float(p0[a])
            reasoning.append(
                f"[ERROR] (worst-everywhere) option {label} has p0 = {p0[a]:.3e}"
            )

    if gen.kind == GeneratorKind.SHANNON:
        for a, d in dominated_pairs(problem):
            label = problem.labels[a]
            if p0[a] > threshold and label not in flagged:
                flagged[label] = float(p0[a])
                reasoning.append(
                    f"[ERROR] (dominated) option {label} is dominated by option "
                    f"{problem.labels[d]} but has p0 = {p0[a]:.3e}"
                )

    if flagged:
        logger.warning(f"⚠️ Dominated options considered: {sorted(flagged)}")
    return DiagnosticReport(is_valid=not flagged, reasoning=reasoning, flagged=flagged)


def check_solution(
    solution: GeriSolution,
    problem: FiniteChoiceProblem,
    gen: GeneratorSpec,
    tolerance: float = 1e-9,
) -> DiagnosticReport:
    """Re-validates the invariants a returned solution must satisfy."""
    generator = build_generator(gen)
    p0 = solution.p0.values
    reasoning = []

    def record(ok: bool, text: str) -> None:
        reasoning.append(f"{'[SUCCESS]' if ok else '[ERROR]'} {text}")

    shape_ok = solution.conditionals.shape == problem.states.shape
    record(shape_ok, "conditionals have one row per state")
    if not shape_ok:
        return DiagnosticReport(is_valid=False, reasoning=reasoning)

    marginal_gap = float(np.max(np.abs(problem.prior @ solution.conditionals - p0)))
    record(marginal_gap <= tolerance, f"p0 = E p(V) (gap {marginal_gap:.3e})")

    support = np.flatnonzero(p0 > 0).tolist()
    record(
        support == sorted(solution.consideration_set),
        "consideration set is the support of p0",
    )

    leaked = float(np.max(solution.conditionals[:, p0 == 0], initial=0.0))
    record(leaked == 0.0, "options outside the support are never chosen")

    recomputed = conditional_matrix(generator, problem.states, p0)
    fixed_gap = float(np.max(np.abs(problem.prior @ recomputed - p0)))
    record(fixed_gap <= tolerance, f"fixed-point residual {fixed_gap:.3e}")

    value_gap = value_identity_gap(gen, problem, solution.p0)
    record(value_gap <= tolerance, f"optimized value identity gap {value_gap:.3e}")

    is_valid = all(not message.startswith("[ERROR]") for message in reasoning)
    return DiagnosticReport(is_valid=is_valid, reasoning=reasoning)
