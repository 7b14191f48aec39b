"""
Generator Factory.

Maps a GeneratorSpec to the strategy that evaluates it.
"""

from geri_choice.config.enums import GeneratorKind
from geri_choice.core.models.generator import GeneratorSpec

from .base import GeneratorStrategy
from .nested_logit import NestedLogitGenerator
from .shannon import ShannonGenerator

_STRATEGIES: dict[GeneratorKind, type[GeneratorStrategy]] = {
    GeneratorKind.SHANNON: ShannonGenerator,
    GeneratorKind.NESTED_LOGIT: NestedLogitGenerator,
}


def build_generator(spec: GeneratorSpec) -> GeneratorStrategy:
    """Returns the strategy instance for ``spec``."""
    return _STRATEGIES[spec.kind](spec)
