from .consideration import check_dominance_exclusion, check_solution
from .equivalence import from_rum, to_equivalent_rum
from .information import (
    conditional_probabilities,
    expected_payoff,
    information_cost,
    information_cost_conjugate,
    optimized_value,
    rational_inattention_objective,
    value_identity_gap,
)
from .solver import FixedPointSolver, solve_fixed_point

__all__ = [
    "FixedPointSolver",
    "check_dominance_exclusion",
    "check_solution",
    "conditional_probabilities",
    "expected_payoff",
    "from_rum",
    "information_cost",
    "information_cost_conjugate",
    "optimized_value",
    "rational_inattention_objective",
    "solve_fixed_point",
    "to_equivalent_rum",
    "value_identity_gap",
]
