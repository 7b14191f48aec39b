"""
Application Enumerations.
Central source of truth for generator kinds and output formats.
"""

from enum import Enum


class GeneratorKind(str, Enum):
    """Supported generalized-entropy generators."""

    SHANNON = "shannon"
    NESTED_LOGIT = "nested_logit"


class OutputFormat(str, Enum):
    """Supported result file formats."""

    JSON = "json"
    CSV = "csv"
