"""Mask builders: disks, annuli, filled Julia sets, boundary bands and point clouds."""

import numpy as np
from scipy import ndimage

from devils_coliseum.field.types import GridSpec, RegionMask
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.poly.dynamics import escape_radius
from devils_coliseum.poly.types import Polynomial

EIGHT_CONNECTED = np.ones((3, 3), dtype=bool)


def disk_mask(grid: GridSpec, center: complex, radius: float) -> RegionMask:
    return RegionMask(grid, np.abs(grid.points() - center) <= radius)


def annulus_mask(grid: GridSpec, inner: float, outer: float, center: complex = 0j) -> RegionMask:
    distance = np.abs(grid.points() - center)
    return RegionMask(grid, (distance >= inner) & (distance <= outer))


def filled_julia_mask(g: Polynomial, grid: GridSpec, n_max: int = 200) -> RegionMask:
    """Pixels whose orbit under g stays within the escape radius for n_max steps."""
    radius = escape_radius([g])
    z = grid.points().ravel()
    alive = np.ones(z.size, dtype=bool)
    index = np.arange(z.size)
    for _ in range(n_max + 1):
        with np.errstate(invalid="ignore"):
            out = ~np.isfinite(z) | (np.abs(z) > radius)
        alive[index[out]] = False
        index, z = index[~out], z[~out]
        if z.size == 0:
            break
        z = evaluate_array(g, z)
    return RegionMask(grid, alive.reshape(grid.shape))


def boundary_band(mask: RegionMask) -> RegionMask:
    """Pixels whose 3x3 neighbourhood meets both the mask and its complement."""
    bits = mask.bits
    dilated = ndimage.binary_dilation(bits, structure=EIGHT_CONNECTED)
    eroded = ndimage.binary_erosion(bits, structure=EIGHT_CONNECTED, border_value=1)
    return mask.with_bits(dilated & ~eroded)


def largest_component(mask: RegionMask) -> RegionMask:
    """Keep the largest 8-connected component; raster islands of a connected set are dropped."""
    labels, count = ndimage.label(mask.bits, structure=EIGHT_CONNECTED)
    if count <= 1:
        return mask
    sizes = np.bincount(labels.ravel())
    sizes[0] = 0
    return mask.with_bits(labels == int(np.argmax(sizes)))


def julia_boundary_mask(g: Polynomial, grid: GridSpec, n_max: int = 200) -> RegionMask:
    """Raster band around J(g) = ∂K(g), reduced to its largest connected piece."""
    return largest_component(boundary_band(filled_julia_mask(g, grid, n_max)))


def rasterize_points(grid: GridSpec, points: np.ndarray, dilate: int = 0) -> RegionMask:
    """Mark the nearest pixel of every point inside the window, then dilate."""
    row, col, inside = grid.nearest_index(np.asarray(points))
    bits = np.zeros(grid.shape, dtype=bool)
    bits[row[inside], col[inside]] = True
    if dilate > 0:
        bits = ndimage.binary_dilation(bits, structure=EIGHT_CONNECTED, iterations=dilate)
    return RegionMask(grid, bits)


def dilate(mask: RegionMask, pixels: int = 1) -> RegionMask:
    if pixels <= 0:
        return mask
    return mask.with_bits(
        ndimage.binary_dilation(mask.bits, structure=EIGHT_CONNECTED, iterations=pixels)
    )


def difference(a: RegionMask, b: RegionMask) -> RegionMask:
    return a.with_bits(a.bits & ~b.bits)
