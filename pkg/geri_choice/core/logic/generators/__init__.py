from .base import GeneratorStrategy
from .diagnostics import check_generator
from .factory import build_generator
from .functions import (
    as_valuations,
    choice_probabilities,
    conjugate,
    generalized_entropy,
    h_value,
    s_value,
    surplus,
)
from .nested_logit import NestedLogitGenerator
from .oracles import fenchel_grid_maximum, simplex_mesh
from .shannon import ShannonGenerator
from .simulation import (
    SimulationResult,
    expected_shock_given_choice,
    simulate_choice_frequencies,
)

__all__ = [
    "GeneratorStrategy",
    "NestedLogitGenerator",
    "ShannonGenerator",
    "SimulationResult",
    "as_valuations",
    "build_generator",
    "check_generator",
    "choice_probabilities",
    "conjugate",
    "expected_shock_given_choice",
    "fenchel_grid_maximum",
    "generalized_entropy",
    "h_value",
    "s_value",
    "simplex_mesh",
    "simulate_choice_frequencies",
    "surplus",
]
