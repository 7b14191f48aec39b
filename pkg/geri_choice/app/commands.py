"""
Command Handlers.
One function per subcommand. Each returns a process exit code: 0 on success,
1 for invalid input and 2 when the fixed-point iteration does not converge.
"""

import argparse
from pathlib import Path

import numpy as np

from geri_choice.config.enums import GeneratorKind
from geri_choice.config.logging_config import log as logger
from geri_choice.config.settings import AppendixExample, ExperimentDefaults, Paths
from geri_choice.core.exceptions import InvalidZeta, NoConvergence
from geri_choice.core.logic.generators import check_generator
from geri_choice.core.logic.geri import (
    check_dominance_exclusion,
    check_solution,
    solve_fixed_point,
)
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.solution import SolverConfig
from geri_choice.core.services.appendix_service import (
    regularity_check,
    run_appendix_table,
)
from geri_choice.core.services.monte_carlo_service import panel_config, run_table1
from geri_choice.infrastructure.persistence.model_file import (
    load_generator_spec,
    load_model_file,
)

from .services import ExportService
from .views import render_appendix, render_panels, render_report, render_solution

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_CONVERGENCE = 2

VERIFY_STATES = 20


def solver_from_args(
    args: argparse.Namespace, base: SolverConfig | None = None
) -> SolverConfig:
    """Applies --tol, --max-iter and --seed on top of ``base``."""
    settings = (base or SolverConfig()).model_dump()
    if args.tol is not None:
        settings["tolerance"] = args.tol
    if args.max_iter is not None:
        settings["max_iterations"] = args.max_iter
    if args.seed is not None:
        settings["seed"] = args.seed
    return SolverConfig(**settings)


def cmd_solve(args: argparse.Namespace) -> int:
    generator, problem, solver = load_model_file(args.model)
    solver = solver_from_args(args, solver)
    default = Paths.RESULTS / f"{Path(args.model).stem}_solution.json"
    out = Path(args.out) if args.out else default

    try:
        solution = solve_fixed_point(generator, problem, solver)
    except NoConvergence as e:
        ExportService.write_solution(e.solution, out)
        print(render_solution(e.solution))
        logger.error(f"❌ {e}")
        return EXIT_NO_CONVERGENCE

    ExportService.write_solution(solution, out)
    print(render_solution(solution))
    return EXIT_OK


def _panel_title(zeta: float) -> str:
    return "Multinomial logit" if zeta == 1.0 else f"Nested logit (zeta = {zeta:g})"


def _table1_path(args: argparse.Namespace, zeta: float) -> Path:
    if args.out and len(args.zeta) == 1:
        return Path(args.out)
    if args.out:
        out = Path(args.out)
        return out.with_name(f"{out.stem}_zeta{zeta:g}{out.suffix or '.csv'}")
    return Paths.RESULTS / f"table1_zeta{zeta:g}.csv"


def cmd_table1(args: argparse.Namespace) -> int:
    for zeta in args.zeta:
        if not 0.0 < zeta <= 1.0:
            raise InvalidZeta(f"zeta = {zeta} must lie in (0, 1]")

    solver = solver_from_args(argparse.Namespace(**{**vars(args), "seed": None}))
    panels = {}
    for zeta in args.zeta:
        config = panel_config(
            zeta,
            n_states=args.n_states,
            n_replications=args.replications,
            seed=ExperimentDefaults.SEED if args.seed is None else args.seed,
            solver=solver,
            threads=args.threads,
            symmetrize=not args.no_symmetrize,
            payoff_scale=args.scale,
        )
        stats = run_table1(config)
        ExportService.write_summary(stats, _table1_path(args, zeta))
        panels[_panel_title(zeta)] = stats

    print(render_panels(panels))
    return EXIT_OK


def cmd_appendix(args: argparse.Namespace) -> int:
    columns = run_appendix_table(solver_from_args(args))
    print(render_appendix(columns))

    solutions = {(c.model, tuple(c.choice_set)): c.solution for c in columns}
    small_set, full_set = (tuple(s) for s in AppendixExample.CHOICE_SETS)
    for model in dict.fromkeys(c.model for c in columns):
        small, full = solutions[model, small_set], solutions[model, full_set]
        report = regularity_check(small, full)
        print(render_report(f"Regularity ({model})", report))

    out = Path(args.out) if args.out else Paths.RESULTS / "appendix.csv"
    ExportService.write_appendix(columns, out)
    return EXIT_OK


def _generator_from_arg(value: str) -> GeneratorSpec:
    if value == GeneratorKind.SHANNON.value:
        return GeneratorSpec.shannon()
    return load_generator_spec(value)


def _dominance_problem(n_options: int, seed: int) -> FiniteChoiceProblem:
    """Random states whose last option is strictly worst in every state."""
    rng = np.random.default_rng(seed)
    states = rng.uniform(size=(VERIFY_STATES, n_options))
    states[:, -1] = states[:, :-1].min(axis=1) - 0.1 - rng.uniform(size=VERIFY_STATES)
    return FiniteChoiceProblem.equiprobable(states)


def cmd_verify(args: argparse.Namespace) -> int:
    generator = _generator_from_arg(args.generator)
    seed = args.seed if args.seed is not None else 0

    report = check_generator(generator, trials=args.trials, seed=seed)
    print(render_report(f"Generator identities ({generator.kind.value})", report))
    for outcome in report.outcomes:
        print(f"  {outcome.name:<22} max violation {outcome.max_violation:.3e}")

    problem = _dominance_problem(generator.n_options or 4, seed)
    solver = solver_from_args(args)
    solution = solve_fixed_point(generator, problem, solver)
    dominance = check_dominance_exclusion(
        solution, problem, generator, solver.prune_threshold
    )
    structure = check_solution(solution, problem, generator)
    print(render_report("Dominated options", dominance))
    print(render_report("Solution invariants", structure))

    passed = report.is_valid and dominance.is_valid and structure.is_valid
    return EXIT_OK if passed else EXIT_INPUT
