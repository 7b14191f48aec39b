"""
Monte Carlo Service.
Five options with valuations drawn i.i.d. Uniform(0, 1): solves the GERI
model on each simulated prior and summarizes the conditional choice
probabilities per option.

Each replication draws its own states from a PCG64 stream spawned from the
configured seed, so results are bit-reproducible for a fixed seed whatever
the number of threads.

Options are exchangeable under the prior, within nests for nested logit. By
default every draw also enters under each nest-preserving rotation of the
options, so the simulated prior keeps that symmetry exactly. Each solve then
runs on 5 (logit) or 6 (nested) times as many states as there are draws and
takes about that much longer; the nested panel is the expensive one.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from geri_choice.config.logging_config import log as logger
from geri_choice.config.settings import ExperimentDefaults
from geri_choice.core.logic.geri import solve_fixed_point
from geri_choice.core.models.experiment import MonteCarloConfig, SummaryStats
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.solution import SolverConfig


def summarize_conditionals(
    conditionals: np.ndarray, states: np.ndarray
) -> SummaryStats:
    """
    Per-option mean, median and standard deviation over equally likely states,
    and the average probability of choosing the highest-valued option (ties go
    to the lowest index).
    """
    conditionals = np.atleast_2d(conditionals)
    states = np.atleast_2d(states)
    best = np.argmax(states, axis=1)
    efficiency = float(np.mean(conditionals[np.arange(len(best)), best]))
    return SummaryStats(
        avg=conditionals.mean(axis=0).tolist(),
        median=np.median(conditionals, axis=0).tolist(),
        std=conditionals.std(axis=0).tolist(),
        efficiency=efficiency,
        n_states=conditionals.shape[0],
        n_solved_states=conditionals.shape[0],
    )


def panel_config(
    zeta: float,
    n_states: int = ExperimentDefaults.N_STATES,
    n_replications: int = ExperimentDefaults.N_REPLICATIONS,
    seed: int = ExperimentDefaults.SEED,
    solver: SolverConfig | None = None,
    threads: int = 1,
    symmetrize: bool = True,
    payoff_scale: float = 1.0,
) -> MonteCarloConfig:
    """Design for one panel: multinomial logit when zeta is 1, else nested."""
    if zeta == 1.0:
        generator = GeneratorSpec.shannon()
    else:
        generator = GeneratorSpec.nested_logit(
            ExperimentDefaults.NESTS, [zeta] * len(ExperimentDefaults.NESTS)
        )
    return MonteCarloConfig(
        n_options=ExperimentDefaults.N_OPTIONS,
        n_states=n_states,
        n_replications=n_replications,
        seed=seed,
        generator=generator,
        solver=solver or SolverConfig(),
        threads=threads,
        symmetrize=symmetrize,
        payoff_scale=payoff_scale,
    )


def exchangeable_permutations(config: MonteCarloConfig) -> list[np.ndarray]:
    """
    Column orders that leave the i.i.d. prior and the generator unchanged:
    rotations of all options for logit, rotations within each nest otherwise.
    """
    structure = config.generator.structure
    nests = (
        [list(range(config.n_options))] if structure is None else structure.nests
    )
    orders = [np.arange(config.n_options)]
    for nest in nests:
        expanded = []
        for order in orders:
            for shift in range(len(nest)):
                rotated = order.copy()
                rotated[nest] = order[np.roll(nest, shift)]
                expanded.append(rotated)
        orders = expanded
    return orders


def draw_states(config: MonteCarloConfig, rng: np.random.Generator) -> np.ndarray:
    """Uniform(0, payoff_scale) valuations, symmetrized if configured."""
    draws = config.payoff_scale * rng.uniform(size=(config.n_states, config.n_options))
    if not config.symmetrize:
        return draws
    orders = exchangeable_permutations(config)
    return np.concatenate([draws[:, order] for order in orders])


def run_replication(
    config: MonteCarloConfig, seed: np.random.SeedSequence, index: int = 0
) -> SummaryStats:
    """Draws one simulated prior, solves it and summarizes the conditionals."""
    rng = np.random.Generator(np.random.PCG64(seed))
    states = draw_states(config, rng)
    problem = FiniteChoiceProblem.equiprobable(states)

    solution = solve_fixed_point(config.generator, problem, config.solver)
    stats = summarize_conditionals(solution.conditionals, states)
    logger.info(
        f"Replication {index}: efficiency {stats.efficiency:.4f}, "
        f"{solution.iterations} iterations"
    )
    return stats


def run_table1(config: MonteCarloConfig) -> SummaryStats:
    """
    Average of the per-replication summaries, with standard errors of the
    option averages and of the efficiency across replications.
    """
    seeds = np.random.SeedSequence(config.seed).spawn(config.n_replications)
    indices = range(config.n_replications)
    logger.info(
        f"Monte Carlo: {config.n_replications} replications x {config.n_states} "
        f"states, generator {config.generator.kind.value}, seed {config.seed}"
    )

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            runs = list(
                pool.map(lambda s, i: run_replication(config, s, i), seeds, indices)
            )
    else:
        runs = [
            run_replication(config, s, i)
            for s, i in zip(seeds, indices, strict=True)
        ]

    avg = np.array([r.avg for r in runs])
    efficiency = np.array([r.efficiency for r in runs])
    n = len(runs)

    def standard_error(values: np.ndarray) -> np.ndarray:
        if n < 2:
            return np.zeros(values.shape[1:])
        return values.std(axis=0, ddof=1) / np.sqrt(n)

    return SummaryStats(
        avg=avg.mean(axis=0).tolist(),
        median=np.mean([r.median for r in runs], axis=0).tolist(),
        std=np.mean([r.std for r in runs], axis=0).tolist(),
        efficiency=float(efficiency.mean()),
        avg_se=standard_error(avg).tolist(),
        efficiency_se=float(standard_error(efficiency[:, None])[0]),
        n_states=config.n_states,
        n_solved_states=runs[0].n_solved_states,
        n_replications=n,
        payoff_scale=config.payoff_scale,
        seed=config.seed,
    )
