"""Tests for empirical pointwise Hölder exponents."""

import math

import numpy as np
import pytest

from devils_coliseum.field.operator import field_from_function
from devils_coliseum.field.types import GridSpec, ScalarField
from devils_coliseum.symbolic.holder import empirical_holder
from devils_coliseum.symbolic.types import HolderEstimate

GRID = GridSpec.square(1.0, 129)
CENTER = GRID.point_at(64, 64)


@pytest.mark.parametrize("alpha", [1.0, 0.5, 0.3])
def test_power_law_exponent_is_recovered(alpha: float) -> None:
    field = field_from_function(GRID, lambda z: np.abs(z - CENTER) ** alpha)
    estimate = empirical_holder(field, CENTER)
    assert estimate.reliable
    assert estimate.exponent == pytest.approx(alpha, abs=1e-6)
    assert estimate.fit_quality == pytest.approx(1.0)
    assert estimate.z0 == CENTER


def test_flat_field_is_unreliable() -> None:
    field = ScalarField(GRID, np.full(GRID.shape, 0.5), np.zeros(GRID.shape), {"N": 100})
    estimate = empirical_holder(field, CENTER)
    assert not estimate.reliable
    assert math.isnan(estimate.exponent)


def test_points_near_the_edge_or_outside_are_rejected() -> None:
    field = field_from_function(GRID, lambda z: z.real)
    with pytest.raises(ValueError, match="edge"):
        empirical_holder(field, GRID.point_at(3, 64))
    with pytest.raises(ValueError, match="outside"):
        empirical_holder(field, 5.0 + 0j)


def test_custom_radii_must_decrease() -> None:
    with pytest.raises(ValueError):
        HolderEstimate(0.5, 1.0, (0.1, 0.2, 0.3), 0j)
    with pytest.raises(ValueError):
        HolderEstimate(0.5, 1.0, (0.2, 0.1), 0j)
