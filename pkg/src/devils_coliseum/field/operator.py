"""The transition operator M_τ on raster fields and its fixed-point / limit checks."""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from devils_coliseum.field.types import GridSpec, ScalarField
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.semigroup.types import GeneratorSystem

logger = logging.getLogger(__name__)


def interpolate(
    values: np.ndarray,
    grid: GridSpec,
    z: np.ndarray,
    outside_value: float,
) -> np.ndarray:
    """Bilinear interpolation of a pixel array at arbitrary points; outside_value off-window."""
    z = np.asarray(z, dtype=np.complex128)
    inside = grid.inside(z)
    row, col = grid.fractional_index(np.where(inside, z, grid.re_min + 1j * grid.im_max))
    sampled = ndimage.map_coordinates(values, [row.ravel(), col.ravel()], order=1, mode="nearest")
    return np.where(inside, sampled.reshape(z.shape), outside_value)


def field_from_function(grid: GridSpec, func: Callable[[np.ndarray], np.ndarray]) -> ScalarField:
    """Sample a function of z at the pixel centres of grid."""
    values = np.asarray(func(grid.points()), dtype=np.float64)
    return ScalarField(grid, values, np.zeros(grid.shape), {})


def operator_apply(
    sys: GeneratorSystem,
    field: ScalarField,
    boundary_value: float,
) -> ScalarField:
    """
    One step of M_τ: value(z) = Σ_j p_j φ(h_j(z)).

    φ is the bilinear interpolant of field inside its window and boundary_value
    outside (1 for escape-probability fields). The undecided channel is carried
    along the same way with 0 outside the window.
    """
    grid = field.grid
    z = grid.points()
    values = np.zeros(grid.shape)
    undecided = np.zeros(grid.shape)
    for p, g in zip(sys.weights, sys.generators, strict=True):
        images = evaluate_array(g, z)
        values += p * interpolate(field.values, grid, images, boundary_value)
        undecided += p * interpolate(field.undecided, grid, images, 0.0)

    meta = dict(field.meta)
    meta["operator_steps"] = int(meta.get("operator_steps", 0)) + 1
    return ScalarField(grid, values, undecided, meta)


def max_adjacent_jump(values: np.ndarray) -> float:
    """Largest difference between 4-adjacent pixels."""
    horizontal = np.abs(np.diff(values, axis=1)).max(initial=0.0)
    vertical = np.abs(np.diff(values, axis=0)).max(initial=0.0)
    return float(max(horizontal, vertical))


def constant_interior(values: np.ndarray, window: int = 2) -> np.ndarray:
    """Pixels whose (2·window+1)² neighbourhood holds a single value in {0, 1}."""
    size = 2 * window + 1
    high = ndimage.maximum_filter(values, size=size, mode="nearest")
    low = ndimage.minimum_filter(values, size=size, mode="nearest")
    return (high == low) & ((low == 0.0) | (low == 1.0))


@dataclass(frozen=True, slots=True)
class ResidualReport:
    residual: float
    bound: float
    jump_bound: float
    pixels: int

    @property
    def passed(self) -> bool:
        return self.residual <= self.bound

    def to_dict(self) -> dict:
        return {
            "residual": self.residual,
            "bound": self.bound,
            "jump_bound": self.jump_bound,
            "pixels": self.pixels,
            "passed": self.passed,
        }


def fixed_point_residual(
    sys: GeneratorSystem,
    T: ScalarField,
    max_undecided: float = 0.01,
) -> ResidualReport:
    """
    ‖M_τ T̂ − T̂‖∞ over well-resolved pixels against 3·(MC stderr + interpolation bound).

    The interpolation bound is the largest adjacent-pixel jump of T̂; the tolerance
    is applied pixel by pixel and the report keeps the worst excess.
    """
    applied = operator_apply(sys, T, boundary_value=1.0)
    selected = T.undecided < max_undecided
    jump = max_adjacent_jump(T.values)
    difference = np.abs(applied.values - T.values)
    tolerance = 3.0 * (T.stderr() + jump)

    if not selected.any():
        return ResidualReport(0.0, 0.0, jump, 0)
    excess = (difference - tolerance)[selected]
    k = int(np.argmax(excess))
    return ResidualReport(
        float(difference[selected][k]),
        float(tolerance[selected][k]),
        jump,
        int(selected.sum()),
    )


@dataclass(frozen=True, slots=True)
class OperatorLimitReport:
    norms: tuple[float, ...]
    interior_norms: tuple[float, ...]
    mu_value: float
    phi_infinity: float

    @property
    def final(self) -> float:
        return self.norms[-1] if self.norms else 0.0

    @property
    def final_interior(self) -> float:
        return self.interior_norms[-1] if self.interior_norms else 0.0

    @property
    def eventually_decreasing(self) -> bool:
        """The second half of the norm sequence never increases (up to rounding)."""
        tail = self.norms[len(self.norms) // 2 :]
        return all(b <= a + 1e-9 for a, b in zip(tail, tail[1:], strict=False))

    def to_dict(self) -> dict:
        return {
            "norms": list(self.norms),
            "interior_norms": list(self.interior_norms),
            "final": self.final,
            "final_interior": self.final_interior,
            "eventually_decreasing": self.eventually_decreasing,
            "mu_value": self.mu_value,
            "phi_infinity": self.phi_infinity,
        }


def operator_limit_check(
    sys: GeneratorSystem,
    phi: ScalarField,
    T: ScalarField,
    mu_point: complex,
    steps: int,
    phi_infinity: float,
) -> OperatorLimitReport:
    """
    Iterate M_τ on φ and measure the distance to T·φ(∞) + (1 − T)·φ(mu_point).

    Valid when the stationary measure of the bounded orbits is the point mass at
    mu_point. interior_norms restrict the norm to pixels deep inside regions where
    T̂ is constantly 0 or 1, away from interpolation error across J(G).
    """
    if phi.grid != T.grid:
        raise ValueError("phi and T must share a grid")
    mu_value = float(interpolate(phi.values, phi.grid, np.asarray([mu_point]), phi_infinity)[0])
    expected = T.values * phi_infinity + (1.0 - T.values) * mu_value
    interior = constant_interior(T.values)

    norms: list[float] = []
    interior_norms: list[float] = []
    current = phi
    for _ in range(steps):
        current = operator_apply(sys, current, phi_infinity)
        error = np.abs(current.values - expected)
        norms.append(float(error.max()))
        interior_norms.append(float(error[interior].max(initial=0.0)))

    logger.debug("Operator limit: first %.4g, final %.4g", norms[0] if norms else 0.0,
                 norms[-1] if norms else 0.0)
    return OperatorLimitReport(tuple(norms), tuple(interior_norms), mu_value, phi_infinity)
