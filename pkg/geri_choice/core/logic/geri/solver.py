"""
Fixed-Point Solver.

Finds the unconditional probabilities p0 = E p(V) by successive substitution,
starting from the multinomial logit distribution E softmax(V). Coordinates
that fall below the prune threshold are set to exact zero and stay there; an
exact zero is a fixed point of the map, so the support only shrinks.
"""

import numpy as np

from geri_choice.config.logging_config import log as logger
from geri_choice.core.exceptions import DimensionMismatch, InvalidProblem, NoConvergence
from geri_choice.core.logic.generators import build_generator
from geri_choice.core.logic.kernels import softmax_rows
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.problem import FiniteChoiceProblem
from geri_choice.core.models.solution import GeriSolution, SolverConfig

from .information import (
    conditional_matrix,
    information_cost_matrix,
    optimized_value_matrix,
)

IterationResult = tuple[np.ndarray, int, float, bool]


class FixedPointSolver:
    """
    Successive substitution p0 <- (1 - damping) p0 + damping E p(V).

    Convergence needs the sup-norm residual within ``tolerance`` and, on the
    support, every ratio T(p0)_i / p0_i within ``support_tolerance`` of one,
    so coordinates still shrinking geometrically are pruned before returning.
    """

    def __init__(self, gen: GeneratorSpec, config: SolverConfig | None = None):
        self.spec = gen
        self.config = config or SolverConfig()
        self.generator = build_generator(gen)

    def solve(self, problem: FiniteChoiceProblem) -> GeriSolution:
        """Solves the fixed point; raises NoConvergence with a partial result."""
        try:
            self.generator.check_dimension(problem.n_options)
        except DimensionMismatch as err:
            raise InvalidProblem(str(err)) from err

        states, prior = problem.states, problem.prior
        logger.info(
            f"Solving {self.generator.name} fixed point: "
            f"{problem.n_states} states x {problem.n_options} options"
        )

        best: tuple[bool, float, IterationResult] | None = None
        for k, start in enumerate(self._starting_points(states, prior)):
            run = self._iterate(states, prior, start)
            p0, iterations, residual, converged = run
            objective = optimized_value_matrix(self.generator, states, prior, p0)
            logger.debug(
                f"Start {k}: {iterations} iterations, residual {residual:.3e}, "
                f"objective {objective:.6f}"
            )
            if best is None or self._better(converged, objective, run, best):
                best = (converged, objective, run)

        assert best is not None
        p0, iterations, residual, converged = best[2]
        solution = self._build_solution(problem, p0, iterations, residual, converged)

        if not converged:
            logger.warning(
                f"⚠️ No convergence after {iterations} iterations "
                f"(residual {residual:.3e})"
            )
            raise NoConvergence(residual, iterations, solution)

        logger.info(
            f"Converged in {iterations} iterations (residual {residual:.3e}); "
            f"consideration set {solution.considered_options}"
        )
        return solution

    @staticmethod
    def _better(converged, objective, run, best) -> bool:
        best_converged, best_objective, best_run = best
        if converged != best_converged:
            return converged
        if converged:
            return objective > best_objective
        return run[2] < best_run[2]

    def _starting_points(self, states: np.ndarray, prior: np.ndarray):
        """The logit start, then Dirichlet-perturbed copies of it."""
        logit = prior @ softmax_rows(states)
        yield logit

        rng = np.random.default_rng(self.config.seed)
        for _ in range(self.config.n_restarts - 1):
            noise = rng.dirichlet(np.ones(logit.size))
            start = np.where(logit > 0, 0.5 * logit + 0.5 * noise, 0.0)
            yield start / start.sum()

    def _iterate(
        self, states: np.ndarray, prior: np.ndarray, start: np.ndarray
    ) -> IterationResult:
        cfg = self.config
        p = start.copy()
        active = p > 0
        residual = np.inf

        for iteration in range(1, cfg.max_iterations + 1):
            update = prior @ conditional_matrix(self.generator, states, p)

            dropped = active & (update < cfg.prune_threshold)
            if np.any(dropped):
                active &= ~dropped
                update[~active] = 0.0
                update /= update.sum()
                logger.debug(
                    f"Pruned options {np.flatnonzero(dropped).tolist()} "
                    f"at iteration {iteration}"
                )

            residual = float(np.max(np.abs(update - p)))
            rate_gap = float(
                np.max(np.abs(update[active] / p[active] - 1.0), initial=0.0)
            )
            if (
                not np.any(dropped)
                and residual <= cfg.tolerance
                and rate_gap <= cfg.support_tolerance
            ):
                return p, iteration, residual, True

            p = (1.0 - cfg.damping) * p + cfg.damping * update
            p[~active] = 0.0
            p /= p.sum()

        return p, cfg.max_iterations, residual, False

    def _build_solution(
        self,
        problem: FiniteChoiceProblem,
        p0: np.ndarray,
        iterations: int,
        residual: float,
        converged: bool,
    ) -> GeriSolution:
        p0 = np.where(p0 > self.config.prune_threshold, p0, 0.0)
        p0 = p0 / p0.sum()
        conditionals = conditional_matrix(self.generator, problem.states, p0)
        return GeriSolution(
            p0=p0,
            conditionals=conditionals,
            info_cost=information_cost_matrix(
                self.generator, problem.prior, conditionals
            ),
            objective=optimized_value_matrix(
                self.generator, problem.states, problem.prior, p0
            ),
            consideration_set=np.flatnonzero(p0 > 0).tolist(),
            iterations=iterations,
            residual=residual,
            converged=converged,
            labels=list(problem.labels),
        )


def solve_fixed_point(
    gen: GeneratorSpec,
    problem: FiniteChoiceProblem,
    config: SolverConfig | None = None,
) -> GeriSolution:
    """Unconditional and conditional choice probabilities of the GERI model."""
    return FixedPointSolver(gen, config).solve(problem)
