"""Escape probabilities of two-branch expanding interval systems (singular functions)."""

import logging
from collections.abc import Sequence
from enum import StrEnum
from fractions import Fraction

import numpy as np

from devils_coliseum.affine.types import AffineMap
from devils_coliseum.errors import UnsupportedSystem
from devils_coliseum.semigroup.system import validate_weights

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 48
DEFAULT_SAMPLES = 10_000
DEFAULT_N_MAX = 200
# Live branches kept by the exact recursion before the remaining mass is interpolated.
MAX_FRONTIER = 1 << 16

CANTOR_MAPS = (AffineMap(3.0, 0.0), AffineMap(3.0, -2.0))


def lebesgue_maps() -> tuple[AffineMap, AffineMap]:
    return AffineMap(2.0, 0.0), AffineMap(2.0, -1.0)


class StaircaseMode(StrEnum):
    EXACT = "exact"
    MONTE_CARLO = "monte-carlo"


def check_system(maps: Sequence[AffineMap], probs: Sequence[float]) -> tuple[float, ...]:
    """Two expanding branches with f1(0) = 0 and f2(1) = 1; returns validated weights."""
    if len(maps) != 2:
        raise UnsupportedSystem(f"expected two branches, got {len(maps)}")
    f1, f2 = maps
    if f1.a <= 1 or f2.a <= 1:
        raise UnsupportedSystem(f"branches must be expanding, slopes are {f1.a} and {f2.a}")
    if f1(0.0) != 0.0 or f2(1.0) != 1.0:
        raise UnsupportedSystem(f"branches must fix 0 and 1: f1(0) = {f1(0.0)}, f2(1) = {f2(1.0)}")
    return validate_weights(probs, 2)


def _exact(maps: Sequence[AffineMap], probs: Sequence[float], x: float, depth: int) -> float:
    """
    T(x) = Σ_j p_j·T(f_j(x)) with T = 0 left of 0 and T = 1 right of 1, in exact arithmetic.

    Branches reaching the same point are merged; mass still inside (0, 1) at the
    depth cap is credited as weight·x.
    """
    affine = [(Fraction(f.a), Fraction(f.b)) for f in maps]
    weights = [Fraction(p) for p in probs]
    frontier: dict[Fraction, Fraction] = {Fraction(x): Fraction(1)}
    total = Fraction(0)

    for _ in range(depth):
        following: dict[Fraction, Fraction] = {}
        for point, mass in frontier.items():
            if point <= 0:
                continue
            if point >= 1:
                total += mass
                continue
            for (a, b), p in zip(affine, weights, strict=True):
                image = a * point + b
                following[image] = following.get(image, Fraction(0)) + mass * p
        frontier = following
        if not frontier:
            break
        if len(frontier) > MAX_FRONTIER:
            logger.warning("Exact staircase recursion frontier exceeded %d branches", MAX_FRONTIER)
            break

    for point, mass in frontier.items():
        total += mass * min(Fraction(1), max(Fraction(0), point))
    return float(total)


def _monte_carlo(
    maps: Sequence[AffineMap],
    probs: Sequence[float],
    x: float,
    samples: int,
    n_max: int,
    seed: int,
) -> float:
    """Fraction of random orbits that pass 1 (and hence tend to +∞) within n_max steps."""
    rng = np.random.default_rng(seed)
    slopes = np.array([f.a for f in maps])
    intercepts = np.array([f.b for f in maps])
    cdf = np.cumsum(probs)

    orbit = np.full(samples, float(x))
    escaped = 0
    for _ in range(n_max + 1):
        up = orbit >= 1.0
        escaped += int(np.count_nonzero(up))
        orbit = orbit[~up & (orbit > 0.0)]
        if orbit.size == 0:
            break
        choice = np.minimum(np.searchsorted(cdf, rng.random(orbit.size), side="right"), 1)
        orbit = slopes[choice] * orbit + intercepts[choice]
    return escaped / samples


def staircase_T(
    maps: Sequence[AffineMap],
    probs: Sequence[float],
    x: float,
    mode: StaircaseMode | str = StaircaseMode.EXACT,
    depth: int = DEFAULT_DEPTH,
    samples: int = DEFAULT_SAMPLES,
    n_max: int = DEFAULT_N_MAX,
    seed: int = 0,
) -> float:
    """
    Probability that the random orbit of x tends to +∞.

    For (3x, 3(x-1)+1) with equal weights this is the devil's staircase; for
    (2x, 2(x-1)+1) with weights (a, 1-a) it is Lebesgue's singular function.
    Raises UnsupportedSystem for other branch structures.
    """
    probs = check_system(maps, probs)
    if StaircaseMode(mode) is StaircaseMode.EXACT:
        return _exact(maps, probs, x, depth)
    return _monte_carlo(maps, probs, x, samples, n_max, seed)


def staircase_sweep(
    maps: Sequence[AffineMap],
    probs: Sequence[float],
    xs: Sequence[float] | np.ndarray,
    mode: StaircaseMode | str = StaircaseMode.EXACT,
    depth: int = DEFAULT_DEPTH,
    samples: int = DEFAULT_SAMPLES,
    n_max: int = DEFAULT_N_MAX,
    seed: int = 0,
) -> np.ndarray:
    """staircase_T at every x; Monte Carlo points get independent seeds (seed, index)."""
    xs = np.asarray(xs, dtype=np.float64)
    values = np.empty(xs.size)
    for k, x in enumerate(xs.ravel()):
        if StaircaseMode(mode) is StaircaseMode.EXACT:
            values[k] = staircase_T(maps, probs, float(x), mode, depth=depth)
        else:
            point_seed = int(np.random.SeedSequence([seed, k]).generate_state(1)[0])
            values[k] = staircase_T(maps, probs, float(x), mode, samples=samples, n_max=n_max, seed=point_seed)
    logger.debug("Staircase sweep over %d points (%s)", xs.size, mode)
    return values.reshape(xs.shape)
