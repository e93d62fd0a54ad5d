"""Tests for raster mask builders."""

import numpy as np

from devils_coliseum.field.masks import (
    annulus_mask,
    boundary_band,
    difference,
    dilate,
    disk_mask,
    filled_julia_mask,
    julia_boundary_mask,
    largest_component,
    rasterize_points,
)
from devils_coliseum.field.types import GridSpec, RegionMask
from devils_coliseum.poly.types import Polynomial

SQUARE = Polynomial((0, 0, 1))


def test_disk_and_annulus() -> None:
    grid = GridSpec.square(2.0, 41)
    disk = disk_mask(grid, 0j, 1.0)
    ring = annulus_mask(grid, 1.0, 1.5)
    assert disk.contains(np.array([0.5 + 0j]))[0]
    assert not disk.contains(np.array([1.4 + 0j]))[0]
    assert ring.contains(np.array([1.25j]))[0]
    assert not ring.contains(np.array([0.2 + 0j]))[0]
    assert not ring.contains(np.array([10.0 + 0j]))[0]


def test_filled_julia_of_square_is_the_unit_disk() -> None:
    grid = GridSpec.square(1.5, 61)
    filled = filled_julia_mask(SQUARE, grid, n_max=60)
    radius = np.abs(grid.points())
    assert filled.bits[radius < 0.95].all()
    assert not filled.bits[radius > 1.05].any()


def test_julia_boundary_band_hugs_unit_circle() -> None:
    grid = GridSpec.square(1.5, 61)
    band = julia_boundary_mask(SQUARE, grid, n_max=60)
    radius = np.abs(band.points())
    assert band.count > 0
    assert np.all(np.abs(radius - 1.0) < 3 * grid.pixel_size)


def test_boundary_band_of_full_raster_is_empty() -> None:
    grid = GridSpec.square(1.0, 5)
    assert boundary_band(RegionMask(grid, np.ones(grid.shape, dtype=bool))).count == 0


def test_largest_component_keeps_biggest_piece() -> None:
    grid = GridSpec.square(1.0, 10)
    bits = np.zeros(grid.shape, dtype=bool)
    bits[0:2, 0:2] = True
    bits[5:9, 5:9] = True
    kept = largest_component(RegionMask(grid, bits))
    assert kept.count == 16
    assert not kept.bits[0, 0]


def test_rasterize_dilate_and_difference() -> None:
    grid = GridSpec.square(1.0, 11)
    centre = rasterize_points(grid, np.array([0j, 50.0 + 0j]))
    assert centre.count == 1
    assert centre.bits[5, 5]

    grown = dilate(centre, 1)
    assert grown.count == 9
    assert dilate(centre, 0) is centre
    assert rasterize_points(grid, np.array([0j]), dilate=2).count == 25

    ring = difference(grown, centre)
    assert ring.count == 8
    assert not ring.bits[5, 5]
