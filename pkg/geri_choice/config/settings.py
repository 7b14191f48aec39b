"""
Global Configuration Settings.
Single Source of Truth (SSOT) for the entire project.
Combines paths, solver defaults, numeric tolerances and experiment constants.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


class Paths:
    """Centralized management of project file paths."""

    ROOT = Path(os.getenv("GERI_HOME", Path(__file__).resolve().parents[2]))

    DATA = ROOT / "data"
    MODELS = DATA / "models"
    RESULTS = ROOT / "results"
    LOGS = ROOT / "logs"

    @classmethod
    def make_dirs(cls):
        """Creates output directories if they don't exist."""
        for path in (cls.RESULTS, cls.LOGS):
            path.mkdir(parents=True, exist_ok=True)


class LoggingConfig:
    """Logger level and format."""

    LEVEL = os.getenv("GERI_LOG_LEVEL", "INFO").upper()
    FORMAT = "%(asctime)s [%(levelname)s] %(message)s"
    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class NumericTolerances:
    """Tolerances shared by the numeric kernels."""

    SIMPLEX_INPUT = 1e-9
    SIMPLEX_INTERNAL = 1e-12
    NEGATIVE_ENTRY = 1e-12
    ZETA_FLOOR = 1e-6
    FD_STEP = 1e-6


class SolverDefaults:
    """Default fixed-point solver settings."""

    TOLERANCE = 1e-10
    MAX_ITERATIONS = 100_000
    DAMPING = 1.0
    PRUNE_THRESHOLD = 1e-12
    SUPPORT_TOLERANCE = 1e-6
    N_RESTARTS = 1
    SEED = 0


class ExperimentDefaults:
    """Monte Carlo design of the five-option nested logit comparison."""

    N_OPTIONS = 5
    N_STATES = 10_000
    N_REPLICATIONS = 10
    SEED = 42
    NESTS = [[0, 1, 2], [3, 4]]


class AppendixExample:
    """Four options, three equiprobable states, two nests."""

    STATES = [
        [2.0, 1.0, 3.0, 2.0],
        [3.0, 2.0, 1.0, 4.0],
        [3.0, 2.0, 3.0, 2.0],
    ]
    LABELS = [1, 2, 3, 4]
    NESTS = [[0, 1], [2, 3]]
    ZETA = [0.7, 0.8]
    CHOICE_SETS = ([1, 2, 3], [1, 2, 3, 4])
