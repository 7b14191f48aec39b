"""
Brute-Force Conjugate Oracle.

Maximizes q . v - W*(q) over a regular simplex mesh; the maximum should be the
surplus W(v) and the maximizer the choice probabilities q(v).
"""

import numpy as np
from numpy.typing import ArrayLike

from geri_choice.core.models.generator import GeneratorSpec
from geri_choice.core.models.simplex import ProbabilityVector, ValuationVector

from .factory import build_generator
from .functions import as_valuations


def simplex_mesh(n_options: int, divisions: int) -> np.ndarray:
    """All points of the simplex with coordinates in multiples of 1/divisions."""
    if n_options == 1:
        return np.array([[1.0]])
    if n_options == 2:
        a = np.arange(divisions + 1)
        return np.column_stack([a, divisions - a]) / divisions

    blocks = [np.eye(1, n_options)]
    for first in range(divisions):
        remaining = divisions - first
        rest = simplex_mesh(n_options - 1, remaining) * (remaining / divisions)
        blocks.append(np.column_stack([np.full(len(rest), first / divisions), rest]))
    return np.vstack(blocks)


def fenchel_grid_maximum(
    gen: GeneratorSpec, v: ValuationVector | ArrayLike, step: float = 1e-3
) -> tuple[float, ProbabilityVector]:
    """Returns max_q {q . v - W*(q)} over the mesh and the maximizing q."""
    arr = as_valuations(v)
    strategy = build_generator(gen)
    strategy.check_dimension(arr.size)

    mesh = simplex_mesh(arr.size, int(round(1.0 / step)))
    with np.errstate(invalid="ignore"):
        payoff = np.where(mesh > 0, mesh * arr, 0.0).sum(axis=1)
    values = payoff - strategy.conjugate(mesh)

    best = int(np.argmax(values))
    q = mesh[best]
    return float(values[best]), ProbabilityVector(values=q / q.sum())
