"""Julia-set estimates: non-constancy of T̂ and backward-orbit point clouds."""

import logging
from collections.abc import Sequence

import numpy as np
from scipy import ndimage

from devils_coliseum.field.types import RegionMask, ScalarField
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.poly.dynamics import escape_radius
from devils_coliseum.poly.roots import preimages_batch
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.types import GeneratorSystem

logger = logging.getLogger(__name__)

BURN_IN = 100
DEFAULT_CHAINS = 64
# Accepted root residual |g(ζ) - w| relative to 1 + |w|.
RESIDUAL_TOLERANCE = 1e-8


def classify_julia(sys: GeneratorSystem, T: ScalarField, window: int = 1) -> RegionMask:
    """
    Raster J(G): pixels where T̂ is not constant on the (2·window+1)² neighbourhood.

    A neighbourhood counts as non-constant when max - min exceeds four times the
    largest standard error inside it (never less than 1/N).
    """
    size = 2 * window + 1
    high = ndimage.maximum_filter(T.values, size=size, mode="nearest")
    low = ndimage.minimum_filter(T.values, size=size, mode="nearest")
    noise = ndimage.maximum_filter(T.stderr(), size=size, mode="nearest")
    floor = 1.0 / T.samples if T.samples else 0.0
    bits = (high - low) > 4.0 * np.maximum(noise, floor)
    logger.debug("Julia mask for %s: %d pixels", sys.name or "<anon>", int(bits.sum()))
    return RegionMask(T.grid, bits)


def julia_value_coverage(T: ScalarField, mask: RegionMask, bins: int = 20) -> float:
    """Fraction of the bins of [0, 1] hit by T̂ on the mask pixels."""
    values = T.values[mask.bits]
    if values.size == 0:
        return 0.0
    hist, _ = np.histogram(np.clip(values, 0.0, 1.0), bins=bins, range=(0.0, 1.0))
    return float(np.count_nonzero(hist)) / bins


def pull_back(
    g: Polynomial,
    targets: np.ndarray,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """
    One uniformly chosen preimage under g of every target.

    Returns (points, ok); ok is False where the root iteration did not converge or
    the chosen root fails the residual check.
    """
    targets = np.asarray(targets, dtype=np.complex128)
    if targets.size == 0:
        return targets.copy(), np.zeros(0, dtype=bool)

    roots, converged = preimages_batch(g, targets)
    pick = rng.integers(0, roots.shape[1], size=targets.size)
    chosen = roots[np.arange(targets.size), pick]
    with np.errstate(invalid="ignore"):
        residual = np.abs(evaluate_array(g, chosen) - targets)
        ok = (
            converged
            & np.isfinite(chosen)
            & (residual <= RESIDUAL_TOLERANCE * (1.0 + np.abs(targets)))
        )
    return chosen, ok


def backward_orbit(
    generators: Sequence[Polynomial],
    weights: Sequence[float],
    start: complex,
    count: int,
    rng_seed: int,
    chains: int = DEFAULT_CHAINS,
    burn_in: int = BURN_IN,
) -> np.ndarray:
    """
    Chaos game on preimages: count points approximating the Julia set of the semigroup.

    Runs independent chains from start; each step picks generator j with probability
    p_j and replaces the point by a uniformly chosen root of h_j(ζ) = current. Failed
    steps are dropped and the chain is reseeded from a healthy one.
    """
    if count <= 0:
        return np.zeros(0, dtype=np.complex128)
    rng = np.random.default_rng(rng_seed)
    cdf = np.cumsum(np.asarray(weights, dtype=np.float64))
    chains = max(1, min(chains, count))
    steps = burn_in + -(-count // chains)

    current = np.full(chains, complex(start), dtype=np.complex128)
    emitted: list[np.ndarray] = []
    failures = 0
    for step in range(steps):
        choice = np.minimum(np.searchsorted(cdf, rng.random(chains), side="right"), len(generators) - 1)
        following = current.copy()
        ok = np.ones(chains, dtype=bool)
        for j, g in enumerate(generators):
            selected = choice == j
            if selected.any():
                following[selected], ok[selected] = pull_back(g, current[selected], rng)

        if not ok.all():
            failures += int(np.count_nonzero(~ok))
            donors = following[ok]
            if donors.size:
                following[~ok] = donors[rng.integers(0, donors.size, size=int(np.count_nonzero(~ok)))]
            else:
                following[~ok] = start
        current = following
        if step >= burn_in:
            emitted.append(current[ok].copy())

    if failures:
        logger.warning("Backward orbit: %d root solves failed and were reseeded", failures)
    points = np.concatenate(emitted) if emitted else np.zeros(0, dtype=np.complex128)
    return points[:count]


def julia_backward_cloud(
    sys: GeneratorSystem,
    seed_point: complex | None,
    iters: int,
    rng_seed: int,
    chains: int = DEFAULT_CHAINS,
) -> np.ndarray:
    """
    Sample J(G) = ⋃ h_j⁻¹(J(G)) by random backward iteration.

    seed_point should lie on J(G) (a repelling fixed point, say); None starts far out
    at twice the escape radius, from where preimages converge onto J(G) during burn-in.
    """
    start = 2.0 * sys.escape_radius if seed_point is None else complex(seed_point)
    logger.info("Backward cloud: %d points from %s over %d chains", iters, start, chains)
    return backward_orbit(sys.generators, sys.weights, start, iters, rng_seed, chains)


def single_map_cloud(g: Polynomial, count: int, rng_seed: int, chains: int = DEFAULT_CHAINS) -> np.ndarray:
    """Backward-orbit sample of J(g) for one polynomial."""
    start = 2.0 * escape_radius([g])
    return backward_orbit([g], [1.0], start, count, rng_seed, chains)
