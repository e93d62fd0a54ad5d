"""Tests for the closed-form exponent and dimension bound."""

import math

import pytest

from devils_coliseum.errors import DegreeError, WeightError
from devils_coliseum.symbolic.exponents import dim_lower_bound, sum_inv_deg, u_exponent


def test_worked_example_values() -> None:
    u = u_exponent((4, 4), (0.5, 0.5))
    assert u.value == pytest.approx(0.5, abs=1e-12)
    assert float(u) == u.value
    assert not u.warning
    assert dim_lower_bound((4, 4), (0.5, 0.5)) == pytest.approx(1.5, abs=1e-12)
    assert sum_inv_deg((4, 4)) == 0.5


def test_unequal_weights_and_degrees() -> None:
    p = (0.2, 0.8)
    entropy = -(0.2 * math.log(0.2) + 0.8 * math.log(0.8))
    growth = 0.2 * math.log(2) + 0.8 * math.log(3)
    assert u_exponent((2, 3), p).value == pytest.approx(entropy / growth)
    assert dim_lower_bound((2, 3), p) == pytest.approx(1.0 + entropy / growth)


def test_warning_when_inverse_degrees_reach_one(caplog) -> None:
    u = u_exponent((2, 2), (0.5, 0.5))
    assert u.warning
    assert u.value == pytest.approx(1.0)
    assert "not guaranteed" in caplog.text
    assert u.to_dict()["warning"] is True


def test_invalid_inputs() -> None:
    with pytest.raises(DegreeError):
        u_exponent((1, 4), (0.5, 0.5))
    with pytest.raises(WeightError):
        u_exponent((4, 4), (0.4, 0.4))
    with pytest.raises(WeightError):
        dim_lower_bound((4, 4, 4), (0.5, 0.5))
