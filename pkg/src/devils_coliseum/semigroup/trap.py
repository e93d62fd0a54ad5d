"""Numerical certificates of forward invariance (trapping regions)."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from devils_coliseum.field.types import RegionMask
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.types import (
    Disk,
    GeneratorSystem,
    TrapCertificate,
    TrapFailure,
    TrapRegion,
)

logger = logging.getLogger(__name__)

type TrapCandidate = Disk | TrapRegion | RegionMask

DEFAULT_TRAP_SAMPLES = 720
DEFAULT_TRAP_MARGIN = 1e-3


def as_region(candidate: TrapCandidate) -> TrapRegion:
    if isinstance(candidate, Disk):
        return TrapRegion(disks=(candidate,))
    if isinstance(candidate, RegionMask):
        return TrapRegion(mask=candidate)
    return candidate


def _check_disk(
    sys: GeneratorSystem,
    disk: Disk,
    targets: tuple[Disk, ...],
    samples: int,
) -> tuple[float, TrapFailure | None]:
    """
    Every generator must map the boundary circle of disk into a single target disk.

    By the maximum principle that puts the image of the whole disk inside it.
    Returns the smallest clearance achieved and the worst sample when it fails.
    """
    boundary = disk.boundary(samples)
    worst_clearance = np.inf
    worst: TrapFailure | None = None

    for j, g in enumerate(sys.generators):
        images = evaluate_array(g, boundary)
        best_clearance = -np.inf
        best_values: np.ndarray | None = None
        for target in targets:
            clearance = target.clearance(images)
            clearance = np.where(np.isfinite(clearance), clearance, -np.inf)
            if clearance.min() > best_clearance:
                best_clearance = float(clearance.min())
                best_values = clearance

        if best_clearance < worst_clearance and best_values is not None:
            worst_clearance = best_clearance
            k = int(np.argmin(best_values))
            worst = TrapFailure(complex(boundary[k]), j, complex(images[k]), best_clearance)

    return worst_clearance, worst


def _check_mask(
    sys: GeneratorSystem,
    region: TrapRegion,
    samples: int,
) -> tuple[float, TrapFailure | None]:
    """Boundary pixels of the mask must land one pixel deep inside the region."""
    assert region.mask is not None
    mask = region.mask
    bits = mask.bits
    boundary_bits = bits & ~ndimage.binary_erosion(bits)
    rows, cols = np.nonzero(boundary_bits)
    if rows.size == 0:
        return -np.inf, None
    if rows.size > samples:
        pick = np.linspace(0, rows.size - 1, samples).astype(np.intp)
        rows, cols = rows[pick], cols[pick]

    points = np.array([mask.grid.point_at(r, c) for r, c in zip(rows, cols, strict=True)])
    eroded = TrapRegion(
        disks=tuple(Disk(d.center, d.radius - mask.grid.pixel_size) for d in region.disks),
        mask=mask.with_bits(ndimage.binary_erosion(bits)),
    )
    pixel = mask.grid.pixel_size

    worst: TrapFailure | None = None
    for j, g in enumerate(sys.generators):
        images = evaluate_array(g, points)
        inside = eroded.contains(images)
        if not inside.all():
            k = int(np.flatnonzero(~inside)[0])
            worst = TrapFailure(complex(points[k]), j, complex(images[k]), -pixel)
            return -pixel, worst
    return pixel, None


def certify_trap(
    sys: GeneratorSystem,
    candidate: TrapCandidate,
    samples: int = DEFAULT_TRAP_SAMPLES,
    margin: float = DEFAULT_TRAP_MARGIN,
) -> TrapCertificate | TrapFailure:
    """
    Certify that every generator maps the candidate region strictly into itself.

    Disks are checked on `samples` boundary points each; masks on up to `samples`
    boundary pixels, which must map into the mask eroded by one pixel. Failure is
    returned as a value carrying the worst violating sample.
    """
    region = as_region(candidate)
    min_clearance = np.inf
    failure: TrapFailure | None = None

    for disk in region.disks:
        clearance, worst = _check_disk(sys, disk, region.disks, samples)
        if clearance < min_clearance:
            min_clearance, failure = clearance, worst

    if region.mask is not None:
        clearance, worst = _check_mask(sys, region, samples)
        if clearance < min_clearance:
            min_clearance, failure = clearance, worst

    if min_clearance >= margin:
        logger.debug("Trap certified: clearance %.3g >= margin %.3g", min_clearance, margin)
        return TrapCertificate(region, margin, samples, float(min_clearance))

    if failure is None:
        failure = TrapFailure(complex("nan"), -1, complex("nan"), float(min_clearance))
    logger.info(
        "Trap certification failed: h%d maps %s to %s (clearance %.3g)",
        failure.generator_index + 1,
        failure.point,
        failure.image,
        failure.clearance,
    )
    return failure


@dataclass(frozen=True, slots=True)
class ContainmentReport:
    source_pixels: int
    violations: int

    @property
    def contained(self) -> bool:
        return self.source_pixels > 0 and self.violations == 0


def certify_image_containment(
    g: Polynomial,
    source: RegionMask,
    target: RegionMask,
) -> ContainmentReport:
    """Raster evidence for g(source) ⊂ int(target): images land in target eroded by one pixel."""
    interior = target.with_bits(ndimage.binary_erosion(target.bits))
    images = evaluate_array(g, source.points())
    inside = interior.contains(images)
    return ContainmentReport(source.count, int((~inside).sum()))


def mask_inside_interior(inner: RegionMask, outer: RegionMask) -> ContainmentReport:
    """Raster evidence for inner ⊂ int(outer)."""
    interior = ndimage.binary_erosion(outer.bits)
    return ContainmentReport(inner.count, int((inner.bits & ~interior).sum()))
