"""Empirical pointwise Hölder exponents of a raster field."""

import logging
from collections.abc import Sequence

import numpy as np

from devils_coliseum.field.types import ScalarField
from devils_coliseum.symbolic.types import HolderEstimate

logger = logging.getLogger(__name__)

DEFAULT_RADII_PX = (32, 16, 8, 4, 2, 1)
MIN_R_SQUARED = 0.5


def default_radii(T: ScalarField) -> tuple[float, ...]:
    return tuple(r * T.grid.pixel_size for r in DEFAULT_RADII_PX)


def empirical_holder(
    T: ScalarField,
    z0: complex,
    radii: Sequence[float] | None = None,
) -> HolderEstimate:
    """
    Regress log max_{|z - z0| ≤ r} |T̂(z) - T̂(z0)| on log r.

    z0 is snapped to its pixel centre. Oscillations at or below the Monte Carlo floor
    1/N are left out of the fit; fewer than two usable radii, or R² below
    MIN_R_SQUARED, mark the estimate unreliable.
    """
    grid = T.grid
    radii = tuple(float(r) for r in (radii or default_radii(T)))
    row, col, inside = grid.nearest_index(np.asarray([z0]))
    if not inside[0]:
        raise ValueError(f"point {z0} lies outside the field window")
    row, col = int(row[0]), int(col[0])
    center = grid.point_at(row, col)

    reach_rows = int(np.ceil(max(radii) / grid.dy))
    reach_cols = int(np.ceil(max(radii) / grid.dx))
    if not (
        reach_rows <= row < grid.height - reach_rows and reach_cols <= col < grid.width - reach_cols
    ):
        raise ValueError(f"point {z0} is closer to the window edge than the largest radius")

    rows = slice(row - reach_rows, row + reach_rows + 1)
    cols = slice(col - reach_cols, col + reach_cols + 1)
    patch = T.values[rows, cols]
    distance = np.abs(grid.row_points(rows.start, rows.stop)[:, cols] - center)
    difference = np.abs(patch - T.values[row, col])

    oscillation = np.array(
        [difference[distance <= r * (1.0 + 1e-9)].max() for r in radii], dtype=np.float64
    )
    floor = 1.0 / T.samples if T.samples else 0.0
    usable = oscillation > floor

    if usable.sum() < 2:
        logger.warning("Hölder fit at %s: variation below the noise floor", z0)
        return HolderEstimate(float("nan"), 0.0, radii, center, reliable=False)

    x = np.log(np.asarray(radii)[usable])
    y = np.log(oscillation[usable])
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = float(((y - y.mean()) ** 2).sum())
    r_squared = 1.0 - float((residual**2).sum()) / total if total > 0 else 1.0

    reliable = r_squared >= MIN_R_SQUARED
    if not reliable:
        logger.warning("Hölder fit at %s unreliable: R² = %.3f", z0, r_squared)
    return HolderEstimate(float(slope), r_squared, radii, center, reliable=reliable)
