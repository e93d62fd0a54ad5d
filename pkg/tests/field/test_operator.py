"""Tests for the transition operator on raster fields."""

import numpy as np
import pytest

from devils_coliseum.field.operator import (
    constant_interior,
    field_from_function,
    fixed_point_residual,
    interpolate,
    max_adjacent_jump,
    operator_apply,
    operator_limit_check,
)
from devils_coliseum.field.types import GridSpec, ScalarField
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.system import build_system, coliseum_system


def test_bilinear_interpolation_is_exact_for_linear_functions() -> None:
    grid = GridSpec.square(2.0, 41)
    values = grid.points().real * 2.0 - grid.points().imag
    z = np.array([0.123 + 0.456j, -1.2 - 0.7j])
    np.testing.assert_allclose(interpolate(values, grid, z, 9.0), 2.0 * z.real - z.imag, atol=1e-12)


def test_interpolation_uses_outside_value_off_window() -> None:
    grid = GridSpec.square(1.0, 8)
    out = interpolate(np.zeros(grid.shape), grid, np.array([5.0 + 0j, np.nan + 0j]), 1.0)
    assert out.tolist() == [1.0, 1.0]


def test_operator_preserves_constant_one_and_counts_steps() -> None:
    sys = coliseum_system()
    grid = GridSpec.square(4.6, 24)
    ones = field_from_function(grid, lambda z: np.ones(z.shape))
    once = operator_apply(sys, ones, boundary_value=1.0)
    twice = operator_apply(sys, once, boundary_value=1.0)
    np.testing.assert_allclose(twice.values, 1.0)
    assert twice.meta["operator_steps"] == 2


def test_operator_averages_images_with_weights() -> None:
    sys = coliseum_system((0.25, 0.75))
    grid = GridSpec.square(1.0, 16)
    zeros = field_from_function(grid, lambda z: np.zeros(z.shape))
    applied = operator_apply(sys, zeros, boundary_value=1.0)
    # h2 = z^4/64 keeps the window inside itself; h1 sends the corners out of it.
    corner = grid.point_at(0, 0)
    assert abs(corner**4 - 2 * corner**2) > 1.0
    assert applied.values[0, 0] == pytest.approx(0.25)
    assert applied.values[8, 8] == 0.0


def test_residual_of_exact_fixed_point_is_zero() -> None:
    grid = GridSpec.square(4.6, 20)
    ones = field_from_function(grid, lambda z: np.ones(z.shape))
    report = fixed_point_residual(coliseum_system(), ones)
    assert report.residual == pytest.approx(0.0, abs=1e-12)
    assert report.passed
    assert report.pixels == grid.size
    assert report.to_dict()["passed"] is True


def test_residual_skips_unresolved_pixels() -> None:
    grid = GridSpec.square(1.0, 6)
    field = ScalarField(grid, np.zeros(grid.shape), np.full(grid.shape, 0.5), {"N": 10})
    report = fixed_point_residual(coliseum_system(), field)
    assert report.pixels == 0
    assert report.passed


def test_limit_check_on_invariant_constant() -> None:
    grid = GridSpec.square(2.0, 16)
    phi = field_from_function(grid, lambda z: np.full(z.shape, 0.3))
    T = field_from_function(grid, lambda z: np.full(z.shape, 0.5))
    report = operator_limit_check(coliseum_system(), phi, T, 0j, steps=4, phi_infinity=0.3)
    assert len(report.norms) == 4
    assert report.final == pytest.approx(0.0, abs=1e-12)
    assert report.mu_value == pytest.approx(0.3)
    assert report.eventually_decreasing


def test_limit_check_requires_shared_grid() -> None:
    phi = field_from_function(GridSpec.square(1.0, 8), lambda z: z.real)
    T = field_from_function(GridSpec.square(2.0, 8), lambda z: z.real)
    with pytest.raises(ValueError, match="share a grid"):
        operator_limit_check(coliseum_system(), phi, T, 0j, steps=1, phi_infinity=0.0)


def test_jump_and_constant_interior() -> None:
    assert max_adjacent_jump(np.array([[0.0, 1.0], [0.0, 0.5]])) == 1.0

    values = np.zeros((9, 9))
    values[:, 6:] = 1.0
    interior = constant_interior(values, window=1)
    assert interior[4, 2]
    assert interior[4, 8]
    assert not interior[4, 5]
    assert not constant_interior(np.full((5, 5), 0.5)).any()


def test_limit_norms_decrease_towards_the_attracting_point() -> None:
    # Inside |z| < 0.6 every orbit of z² tends to 0, so M^n φ → φ(0) = 1 in the sup norm.
    sys = build_system([Polynomial.from_coeffs([0, 0, 1])], (1.0,))
    grid = GridSpec.square(0.4, 41)
    phi = field_from_function(grid, lambda z: 1.0 / (1.0 + np.abs(z) ** 2))
    T = field_from_function(grid, lambda z: np.zeros(z.shape))
    report = operator_limit_check(sys, phi, T, 0j, steps=30, phi_infinity=0.0)
    assert report.mu_value == pytest.approx(1.0)
    assert report.final <= 0.05
    assert report.eventually_decreasing
    assert report.norms[-1] <= report.norms[0]
