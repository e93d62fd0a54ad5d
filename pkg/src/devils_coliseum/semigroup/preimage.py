"""Raster test of pairwise disjointness of generator preimages."""

import itertools
import logging

import numpy as np
from scipy import ndimage

from devils_coliseum.field.types import GridSpec, RegionMask
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.types import Disjointness, DisjointnessReport, GeneratorSystem

logger = logging.getLogger(__name__)

# Overlap counts above this share of the region's pixels are a definite overlap.
OVERLAP_FRACTION = 1e-3


def preimage_mask(g: Polynomial, region: RegionMask, grid: GridSpec | None = None) -> RegionMask:
    """Rasterise g^{-1}(region) = {z : g(z) ∈ region} by forward evaluation at pixel centres."""
    grid = grid or region.grid
    images = evaluate_array(g, grid.points())
    return RegionMask(grid, region.contains(images))


def preimage_disjointness(
    sys: GeneratorSystem,
    annulus: RegionMask,
    grid: GridSpec | None = None,
) -> DisjointnessReport:
    """
    Decide whether the preimages h_j^{-1}(annulus) are pairwise disjoint.

    Disjoint when the one-pixel erosions are pairwise disjoint and their union lies
    in the annulus; overlapping when two one-pixel dilations share more than
    OVERLAP_FRACTION of the annulus pixels; inconclusive otherwise.
    """
    grid = grid or annulus.grid
    region_pixels = annulus.count
    masks = [preimage_mask(g, annulus, grid).bits for g in sys.generators]
    counts = tuple(int(b.sum()) for b in masks)

    if sys.m == 1:
        return DisjointnessReport(Disjointness.DISJOINT, counts, 0, 0, 0, region_pixels)

    eroded = [ndimage.binary_erosion(b) for b in masks]
    dilated = [ndimage.binary_dilation(b) for b in masks]

    eroded_overlap = 0
    dilated_overlap = 0
    for a, b in itertools.combinations(range(sys.m), 2):
        eroded_overlap += int((eroded[a] & eroded[b]).sum())
        dilated_overlap = max(dilated_overlap, int((dilated[a] & dilated[b]).sum()))

    union = np.logical_or.reduce(eroded)
    region_bits = annulus.bits if annulus.grid == grid else annulus.contains(grid.points())
    outside = int((union & ~region_bits).sum())

    if eroded_overlap == 0 and outside == 0:
        verdict = Disjointness.DISJOINT
    elif dilated_overlap > OVERLAP_FRACTION * max(region_pixels, 1):
        verdict = Disjointness.OVERLAPPING
    else:
        verdict = Disjointness.INCONCLUSIVE

    logger.debug(
        "Preimage disjointness: %s (preimages=%s, eroded overlap=%d, dilated overlap=%d, outside=%d)",
        verdict,
        counts,
        eroded_overlap,
        dilated_overlap,
        outside,
    )
    return DisjointnessReport(verdict, counts, eroded_overlap, dilated_overlap, outside, region_pixels)
