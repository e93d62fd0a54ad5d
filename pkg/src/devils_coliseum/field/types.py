"""Raster types: grids over a complex-plane window, masks and scalar fields."""

from dataclasses import dataclass, field

import numpy as np

type PointSet = np.ndarray  # 1-D complex128 array
type PixelIndex = tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True, slots=True)
class GridSpec:
    """
    Rectangular window sampled at pixel centres, row-major.

    Row 0 is the top of the window (im_max); column 0 is its left edge (re_min).
    """

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    width: int
    height: int

    def __post_init__(self) -> None:
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError(f"degenerate grid rectangle: {self}")
        if self.width < 2 or self.height < 2:
            raise ValueError(f"grid must be at least 2x2, got {self.width}x{self.height}")

    @classmethod
    def square(cls, half_width: float, size: int, center: complex = 0j) -> "GridSpec":
        return cls(
            center.real - half_width,
            center.real + half_width,
            center.imag - half_width,
            center.imag + half_width,
            size,
            size,
        )

    @property
    def dx(self) -> float:
        return (self.re_max - self.re_min) / self.width

    @property
    def dy(self) -> float:
        return (self.im_max - self.im_min) / self.height

    @property
    def pixel_size(self) -> float:
        return max(self.dx, self.dy)

    @property
    def shape(self) -> tuple[int, int]:
        return self.height, self.width

    @property
    def size(self) -> int:
        return self.width * self.height

    def row_points(self, row_start: int, row_stop: int) -> np.ndarray:
        """Pixel centres of rows [row_start, row_stop) as a (rows, width) array."""
        cols = np.arange(self.width)
        rows = np.arange(row_start, row_stop)
        re = self.re_min + (cols + 0.5) * self.dx
        im = self.im_max - (rows + 0.5) * self.dy
        return re[None, :] + 1j * im[:, None]

    def points(self) -> np.ndarray:
        return self.row_points(0, self.height)

    def point_at(self, row: int, col: int) -> complex:
        return complex(self.re_min + (col + 0.5) * self.dx, self.im_max - (row + 0.5) * self.dy)

    def fractional_index(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Continuous (row, col) coordinates; pixel centres sit on integers."""
        z = np.asarray(z, dtype=np.complex128)
        with np.errstate(invalid="ignore"):
            col = (z.real - self.re_min) / self.dx - 0.5
            row = (self.im_max - z.imag) / self.dy - 0.5
        return row, col

    def inside(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=np.complex128)
        with np.errstate(invalid="ignore"):
            return (
                np.isfinite(z)
                & (z.real >= self.re_min)
                & (z.real <= self.re_max)
                & (z.imag >= self.im_min)
                & (z.imag <= self.im_max)
            )

    def nearest_index(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Nearest pixel (row, col) for each point plus a flag for points inside the window."""
        inside = self.inside(z)
        row, col = self.fractional_index(z)
        row = np.clip(np.where(inside, np.rint(row), 0), 0, self.height - 1).astype(np.intp)
        col = np.clip(np.where(inside, np.rint(col), 0), 0, self.width - 1).astype(np.intp)
        return row, col, inside

    def to_dict(self) -> dict:
        return {
            "rect": [self.re_min, self.re_max, self.im_min, self.im_max],
            "width": self.width,
            "height": self.height,
        }


@dataclass(frozen=True, slots=True, eq=False)
class RegionMask:
    """Boolean raster over a grid."""

    grid: GridSpec
    bits: np.ndarray

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits, dtype=bool)
        if bits.shape != self.grid.shape:
            raise ValueError(f"mask shape {bits.shape} does not match grid {self.grid.shape}")
        object.__setattr__(self, "bits", bits)

    @property
    def count(self) -> int:
        return int(self.bits.sum())

    def contains(self, z: np.ndarray) -> np.ndarray:
        """Nearest-pixel lookup; points outside the window are outside the mask."""
        row, col, inside = self.grid.nearest_index(z)
        return inside & self.bits[row, col]

    def points(self) -> np.ndarray:
        return self.grid.points()[self.bits]

    def with_bits(self, bits: np.ndarray) -> "RegionMask":
        return RegionMask(self.grid, bits)


@dataclass(frozen=True, slots=True, eq=False)
class ScalarField:
    """
    Per-pixel estimates over a grid.

    For escape fields, values is the escaped fraction and undecided the fraction of
    samples left unresolved at n_max; trapped fraction = 1 - values - undecided.
    """

    grid: GridSpec
    values: np.ndarray
    undecided: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("values", "undecided"):
            array = np.asarray(getattr(self, name), dtype=np.float64)
            if array.shape != self.grid.shape:
                raise ValueError(f"{name} shape {array.shape} does not match grid {self.grid.shape}")
            object.__setattr__(self, name, array)

    @property
    def samples(self) -> int | None:
        return self.meta.get("N")

    def stderr(self) -> np.ndarray:
        """Binomial standard error of each pixel estimate; zero where N is unknown."""
        n = self.samples
        if not n:
            return np.zeros_like(self.values)
        v = np.clip(self.values, 0.0, 1.0)
        return np.sqrt(v * (1.0 - v) / n)

    def value_at(self, z: complex) -> float:
        row, col, inside = self.grid.nearest_index(np.asarray([z]))
        if not inside[0]:
            raise ValueError(f"point {z} lies outside the field window")
        return float(self.values[row[0], col[0]])
