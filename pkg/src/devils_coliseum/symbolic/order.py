"""Surrounding order of compact sets, monotonicity of T̂ along it, and the 3-generator trichotomy."""

import functools
import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from devils_coliseum.errors import DisconnectedMask, OrderViolation, TrichotomyViolation
from devils_coliseum.field.masks import EIGHT_CONNECTED, julia_boundary_mask
from devils_coliseum.field.types import GridSpec, RegionMask, ScalarField
from devils_coliseum.semigroup.preimage import preimage_mask
from devils_coliseum.semigroup.system import permute_system
from devils_coliseum.semigroup.types import GeneratorSystem
from devils_coliseum.symbolic.types import SurroundOrder, TrichotomyCase

logger = logging.getLogger(__name__)

# Complement components are taken 4-connected, dual to 8-connected masks.
FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)


def _require_connected(mask: RegionMask, name: str) -> None:
    _, count = ndimage.label(mask.bits, structure=EIGHT_CONNECTED)
    if count != 1:
        raise DisconnectedMask(f"mask {name} has {count} connected components, expected 1")


def bounded_complement(mask: RegionMask) -> np.ndarray:
    """Pixels of the complement not connected to the window border."""
    labels, _ = ndimage.label(~mask.bits, structure=FOUR_CONNECTED)
    border = np.unique(
        np.concatenate([labels[0, :], labels[-1, :], labels[:, 0], labels[:, -1]])
    )
    return (labels > 0) & ~np.isin(labels, border)


def surrounding_compare(a: RegionMask, b: RegionMask) -> SurroundOrder:
    """
    Compare connected masks in the surrounding order.

    a <_s b when every pixel of a lies in a bounded component of the complement
    of b. Raises DisconnectedMask for masks that are empty or not connected.
    """
    if a.grid != b.grid:
        raise ValueError("masks must share a grid")
    _require_connected(a, "a")
    _require_connected(b, "b")

    if np.array_equal(a.bits, b.bits):
        return SurroundOrder.EQUAL
    if not (a.bits & ~bounded_complement(b)).any():
        return SurroundOrder.INSIDE
    if not (b.bits & ~bounded_complement(a)).any():
        return SurroundOrder.OUTSIDE
    return SurroundOrder.INCOMPARABLE


def order_generators(
    sys: GeneratorSystem,
    grid: GridSpec,
    n_max: int = 200,
) -> tuple[GeneratorSystem, list[int]]:
    """
    Reorder generators so their Julia sets go from innermost to outermost.

    Incomparable pairs keep their relative order. Returns the permuted system and the
    permutation (new position -> old index).
    """
    masks = [julia_boundary_mask(g, grid, n_max) for g in sys.generators]

    def compare(i: int, j: int) -> int:
        verdict = surrounding_compare(masks[i], masks[j])
        if verdict is SurroundOrder.INCOMPARABLE:
            logger.warning("Julia sets of h%d and h%d are not nested on this grid", i + 1, j + 1)
        return {SurroundOrder.INSIDE: -1, SurroundOrder.OUTSIDE: 1}.get(verdict, 0)

    order = sorted(range(sys.m), key=functools.cmp_to_key(compare))
    if order != list(range(sys.m)):
        logger.info("Reordered generators by surrounding order: %s", [i + 1 for i in order])
        return permute_system(sys, order), order
    return sys, order


@dataclass(frozen=True, slots=True)
class RegionStats:
    mean: float
    max_deviation: float
    stderr: float
    pixels: int

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "max_deviation": self.max_deviation,
            "stderr": self.stderr,
            "pixels": self.pixels,
        }


def _separated(inner: RegionStats, outer: RegionStats) -> bool:
    return outer.mean - inner.mean > 3.0 * max(inner.stderr, outer.stderr)


@dataclass(frozen=True, slots=True)
class MonotonicityReport:
    regions: tuple[RegionStats, ...]

    @property
    def means(self) -> tuple[float, ...]:
        return tuple(r.mean for r in self.regions)

    @property
    def passed(self) -> bool:
        """Every region's mean exceeds the one inside it by more than 3 standard errors."""
        return all(_separated(a, b) for a, b in zip(self.regions, self.regions[1:]))

    def to_dict(self) -> dict:
        return {"regions": [r.to_dict() for r in self.regions], "passed": self.passed}


def _region_stats(T: ScalarField, mask: RegionMask) -> RegionStats:
    values = T.values[mask.bits]
    if values.size == 0:
        raise ValueError("audit region has no pixels")
    mean = float(values.mean())
    n = T.samples or 0
    stderr = math.sqrt(mean * (1.0 - mean) / n) if n else 0.0
    return RegionStats(mean, float(np.abs(values - mean).max()), stderr, int(values.size))


def monotonicity_audit(
    sys: GeneratorSystem,
    T: ScalarField,
    annuli: Sequence[RegionMask],
) -> MonotonicityReport:
    """
    Check that mean T̂ strictly increases along regions ordered innermost first.

    Consecutive regions must be nested in the surrounding order and their means must
    differ by more than 3 standard errors. Raises OrderViolation naming the 0-based pair.
    """
    stats = tuple(_region_stats(T, mask) for mask in annuli)
    for i in range(len(annuli) - 1):
        if surrounding_compare(annuli[i], annuli[i + 1]) is not SurroundOrder.INSIDE:
            raise OrderViolation(f"region {i} is not surrounded by region {i + 1}", (i, i + 1))
        inner, outer = stats[i], stats[i + 1]
        if not _separated(inner, outer):
            raise OrderViolation(
                f"mean T drops from {inner.mean:.4f} to {outer.mean:.4f} between regions {i} and {i + 1}",
                (i, i + 1),
            )
    logger.debug("Monotonicity audit on %s passed: %s", sys.name or "<anon>", [s.mean for s in stats])
    return MonotonicityReport(stats)


def trichotomy_case(overlaps: dict[tuple[int, int], bool]) -> TrichotomyCase:
    """
    Case of a sorted 3-generator system from which preimage pairs intersect.

    overlaps maps 0-based pairs (0,1), (0,2), (1,2) to True when they intersect.
    """
    o01, o02, o12 = overlaps[(0, 1)], overlaps[(0, 2)], overlaps[(1, 2)]
    if not (o01 or o02 or o12):
        return TrichotomyCase.CASE1
    if not o01 and not o02 and o12:
        return TrichotomyCase.CASE2
    if not o02 and not o12 and o01:
        return TrichotomyCase.CASE3
    raise TrichotomyViolation(
        f"overlap pattern (12={o01}, 13={o02}, 23={o12}) fits none of the three cases"
    )


@dataclass(frozen=True, slots=True)
class TrichotomyReport:
    case: TrichotomyCase
    order: tuple[int, ...]
    preimage_pixels: tuple[int, ...]
    overlap_pixels: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "case": str(self.case),
            "order": [i + 1 for i in self.order],
            "preimage_pixels": list(self.preimage_pixels),
            "overlap_pixels": self.overlap_pixels,
        }


def classify_3gen(
    sys: GeneratorSystem,
    proxy: RegionMask,
    grid: GridSpec | None = None,
    n_max: int = 200,
) -> TrichotomyReport:
    """
    Decide which of the three overlap patterns a 3-generator system realises.

    Generators are first sorted innermost to outermost; then the preimages
    h_i^{-1}(proxy) of a J(G) proxy mask are compared pairwise after a one-pixel
    erosion. Raises TrichotomyViolation when no pattern fits.
    """
    if sys.m != 3:
        raise ValueError(f"classify_3gen needs 3 generators, got {sys.m}")
    grid = grid or proxy.grid
    sorted_sys, order = order_generators(sys, grid, n_max)

    masks = [
        ndimage.binary_erosion(preimage_mask(g, proxy, grid).bits, structure=EIGHT_CONNECTED)
        for g in sorted_sys.generators
    ]
    overlap_pixels = {
        f"{i + 1}{j + 1}": int((masks[i] & masks[j]).sum())
        for i, j in itertools.combinations(range(3), 2)
    }
    overlaps = {(i, j): overlap_pixels[f"{i + 1}{j + 1}"] > 0 for i, j in itertools.combinations(range(3), 2)}
    case = trichotomy_case(overlaps)
    logger.info("Trichotomy: %s (overlaps %s)", case, overlap_pixels)
    return TrichotomyReport(case, tuple(order), tuple(int(m.sum()) for m in masks), overlap_pixels)
