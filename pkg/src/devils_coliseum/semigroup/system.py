"""Construction and validation of generator systems, and the built-in presets."""

import logging
import math
from collections.abc import Sequence

from devils_coliseum.errors import DegreeError, DuplicateGenerator, WeightError
from devils_coliseum.poly.dynamics import escape_radius
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.trap import certify_trap
from devils_coliseum.semigroup.types import Disk, GeneratorSystem, TrapFailure, TrapRegion

logger = logging.getLogger(__name__)

WEIGHT_TOLERANCE = 1e-12


def validate_weights(weights: Sequence[float], m: int | None = None) -> tuple[float, ...]:
    """Check that weights form a point of the open simplex (or (1.0,) when m = 1)."""
    weights = tuple(float(p) for p in weights)
    if m is not None and len(weights) != m:
        raise WeightError(f"expected {m} weights, got {len(weights)}")
    if not weights:
        raise WeightError("weights must not be empty")
    if abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
        raise WeightError(f"weights sum to {math.fsum(weights)!r}, not 1")
    if len(weights) >= 2 and any(not (0.0 < p < 1.0) for p in weights):
        raise WeightError(f"every weight must lie in (0, 1), got {weights}")
    return weights


def build_system(
    polys: Sequence[Polynomial],
    weights: Sequence[float],
    name: str = "",
) -> GeneratorSystem:
    """
    Validate generators and weights and compute the common escape radius.

    Raises WeightError, DegreeError or DuplicateGenerator.
    """
    polys = tuple(polys)
    if not polys:
        raise DegreeError("a generator system needs at least one polynomial")
    weights = validate_weights(weights, len(polys))

    for index, g in enumerate(polys, start=1):
        if g.degree < 2:
            raise DegreeError(f"generator h{index} has degree {g.degree} < 2")

    seen: dict[tuple[complex, ...], int] = {}
    for index, g in enumerate(polys, start=1):
        if g.coeffs in seen:
            raise DuplicateGenerator(f"generators h{seen[g.coeffs]} and h{index} are identical")
        seen[g.coeffs] = index

    radius = escape_radius(polys)
    logger.debug("Built system %s: m=%d, degrees=%s, R=%.6g", name or "<anon>", len(polys),
                 [g.degree for g in polys], radius)
    return GeneratorSystem(polys, weights, radius, name=name)


def permute_system(sys: GeneratorSystem, order: Sequence[int]) -> GeneratorSystem:
    """Reorder generators (and their weights); the trap certificate carries over."""
    order = list(order)
    if sorted(order) != list(range(sys.m)):
        raise ValueError(f"{order} is not a permutation of range({sys.m})")
    rebuilt = build_system(
        [sys.generators[i] for i in order],
        [sys.weights[i] for i in order],
        name=sys.name,
    )
    return rebuilt.with_trap(sys.trap)


# Worked example: h1 = g1∘g1 with g1 = z² - 1, h2 = g2∘g2 with g2 = z²/4.
COLISEUM_H1 = Polynomial((0, 0, -2, 0, 1))
COLISEUM_H2 = Polynomial((0, 0, 0, 0, 1 / 64))
COLISEUM_TRAP = TrapRegion(disks=(Disk(0j, 0.4), Disk(-1 + 0j, 0.2)))
# Julia set of h2 is the circle |z| = 4; J(G) sits in K(h2) minus D(0, 0.4).
COLISEUM_OUTER_RADIUS = 4.0
COLISEUM_INNER_RADIUS = 0.4


def with_certified_trap(sys: GeneratorSystem, region: TrapRegion) -> GeneratorSystem:
    """Attach the region as trap if it certifies; otherwise keep the system trap-less."""
    result = certify_trap(sys, region)
    if isinstance(result, TrapFailure):
        logger.warning("Trap for %s did not certify; only escape will be decisive", sys.name)
        return sys
    return sys.with_trap(result)


def coliseum_system(weights: Sequence[float] = (0.5, 0.5)) -> GeneratorSystem:
    """The two-generator worked example with its certified trap."""
    sys = build_system([COLISEUM_H1, COLISEUM_H2], weights, name="coliseum")
    return with_certified_trap(sys, COLISEUM_TRAP)


PRESETS = {
    "coliseum": coliseum_system,
}
