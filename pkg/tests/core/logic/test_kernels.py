import numpy as np
import pytest

from geri_choice.core.exceptions import (
    AllMinusInfinity,
    EmptyVector,
    InvalidProblem,
    NegativeEntry,
    NotNormalized,
)
from geri_choice.core.logic.kernels import (
    check_extended,
    log_sum_exp,
    safe_log,
    softmax_rows,
    validate_simplex,
    xlogy,
)
from geri_choice.core.models.simplex import ProbabilityVector


class TestValidateSimplex:
    def test_renormalizes_round_off(self):
        q = validate_simplex([0.3, 0.7 + 5e-10])
        assert isinstance(q, ProbabilityVector)
        assert abs(q.values.sum() - 1.0) < 1e-15

    def test_tiny_negative_is_clipped(self):
        q = validate_simplex([-1e-13, 1.0])
        assert q.values[0] == 0.0

    def test_accepts_probability_vector(self):
        q = ProbabilityVector(values=[0.5, 0.5])
        assert validate_simplex(q).values.tolist() == [0.5, 0.5]

    @pytest.mark.parametrize(
        "values, error",
        [
            ([], EmptyVector),
            ([-0.1, 1.1], NegativeEntry),
            ([np.inf, 0.0], NegativeEntry),
            ([0.3, 0.6], NotNormalized),
        ],
    )
    def test_errors(self, values, error):
        with pytest.raises(error):
            validate_simplex(values)


class TestLogSumExp:
    def test_symmetric(self):
        assert log_sum_exp([0.0, 0.0]) == pytest.approx(np.log(2.0), abs=1e-15)

    def test_large_values_do_not_overflow(self):
        assert log_sum_exp([1000.0, 1000.0]) == pytest.approx(1000.0 + np.log(2.0))

    def test_minus_infinity_contributes_nothing(self):
        assert log_sum_exp([1.0, -np.inf]) == pytest.approx(1.0, abs=1e-15)

    def test_all_minus_infinity(self):
        assert np.isneginf(log_sum_exp([-np.inf, -np.inf]))

    def test_rejects_nan(self):
        with pytest.raises(InvalidProblem):
            check_extended([np.nan])


class TestSoftmaxRows:
    def test_rows_sum_to_one(self):
        rng = np.random.default_rng(3)
        p = softmax_rows(rng.normal(size=(6, 4)) * 50)
        np.testing.assert_allclose(p.sum(axis=1), 1.0, atol=1e-12)

    def test_minus_infinity_gets_exact_zero(self):
        p = softmax_rows(np.array([[0.0, -np.inf, 0.0]]))
        assert p[0, 1] == 0.0
        np.testing.assert_allclose(p[0], [0.5, 0.0, 0.5])

    def test_blocked_row(self):
        with pytest.raises(AllMinusInfinity):
            softmax_rows(np.array([[-np.inf, -np.inf]]))


def test_safe_log_and_xlogy():
    logs = safe_log(np.array([0.0, 1.0]))
    assert np.isneginf(logs[0])
    assert xlogy(np.array([0.0, 2.0]), logs).tolist() == [0.0, 0.0]
