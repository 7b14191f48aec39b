"""
Generator Self-Validation.

Runs the numerical rule suite over random interior points.
"""

from geri_choice.config.logging_config import log as logger
from geri_choice.core.inference_engine.engine import DiagnosticEngine
from geri_choice.core.knowledge_base.rules import TrialPoints, obtain_generator_rules
from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.result_validation import DiagnosticReport

from .factory import build_generator

DEFAULT_OPTIONS = 4


def check_generator(
    gen: GeneratorSpec, trials: int = 100, seed: int = 0, n_options: int | None = None
) -> DiagnosticReport:
    """
    Checks homogeneity, H(S(q)) = q, the weighted Jacobian identity, the
    surplus gradient and entropy concavity over ``trials`` random points.
    Shannon generators have no fixed size; ``n_options`` picks one.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    strategy = build_generator(gen)
    n = gen.n_options or n_options or DEFAULT_OPTIONS
    strategy.check_dimension(n)

    points = TrialPoints.draw(n, trials, seed)
    report = DiagnosticEngine(obtain_generator_rules()).evaluate(strategy, points)

    for message in report.reasoning:
        logger.debug(message)
    logger.info(
        f"Generator check ({strategy.name}, {trials} trials): "
        f"{'passed' if report.is_valid else 'FAILED'}"
    )
    return report
