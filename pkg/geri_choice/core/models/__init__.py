from .experiment import AppendixColumn, MonteCarloConfig, SummaryStats
from .generator import GeneratorSpec, NestStructure
from .problem import FiniteChoiceProblem
from .result_validation import CheckOutcome, DiagnosticReport
from .simplex import ProbabilityVector, ValuationVector
from .solution import GeriSolution, SolverConfig

__all__ = [
    "AppendixColumn",
    "CheckOutcome",
    "DiagnosticReport",
    "FiniteChoiceProblem",
    "GeneratorSpec",
    "GeriSolution",
    "MonteCarloConfig",
    "NestStructure",
    "ProbabilityVector",
    "SolverConfig",
    "SummaryStats",
    "ValuationVector",
]
