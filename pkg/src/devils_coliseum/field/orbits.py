"""Vectorised Monte Carlo orbit classification for a chunk of starting points."""

from dataclasses import dataclass

import numpy as np

from devils_coliseum.field.rng import stream_keys, uniforms
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.semigroup.types import Disk, GeneratorSystem

# An orbit counts as having reached a target after this many consecutive steps inside it.
TARGET_DWELL = 10


@dataclass(frozen=True, slots=True)
class OrbitTask:
    """
    N random orbits from each of a chunk of starting points.

    point_offset is the global index of points[0]; together with the seed it fixes
    the random stream of every (point, sample) pair.
    """

    sys: GeneratorSystem
    points: np.ndarray
    point_offset: int
    N: int
    n_max: int
    seed: int
    target: Disk | None = None


@dataclass(frozen=True, slots=True)
class OrbitCounts:
    """Per-point outcome counts; escaped + trapped + target + undecided = N."""

    escaped: np.ndarray
    trapped: np.ndarray
    target: np.ndarray
    undecided: np.ndarray


def classify_orbits(task: OrbitTask) -> OrbitCounts:
    """
    Follow every sample orbit of the chunk until it escapes, is captured, or n_max.

    Without a target, capture means entering the certified trap of the system (one
    hit suffices: the trap is forward invariant). With a target, capture means
    staying inside it for TARGET_DWELL consecutive steps and the trap is ignored.
    """
    sys = task.sys
    count = task.points.size
    points = np.asarray(task.points, dtype=np.complex128).ravel()

    owner = np.repeat(np.arange(count), task.N)
    sample = np.tile(np.arange(task.N), count)
    keys = stream_keys(task.seed, owner + task.point_offset, sample)
    z = points[owner]
    dwell = np.zeros(z.size, dtype=np.int32)

    escaped = np.zeros(count, dtype=np.int64)
    captured = np.zeros(count, dtype=np.int64)
    region = sys.trap_region

    for step in range(task.n_max + 1):
        with np.errstate(invalid="ignore"):
            out = ~np.isfinite(z) | (np.abs(z) > sys.escape_radius)
        escaped += np.bincount(owner[out], minlength=count)

        if task.target is not None:
            dwell = np.where(task.target.contains(z) & ~out, dwell + 1, 0)
            caught = dwell >= TARGET_DWELL
        elif region is not None:
            caught = region.contains(z) & ~out
        else:
            caught = np.zeros(z.size, dtype=bool)
        captured += np.bincount(owner[caught], minlength=count)

        live = ~(out | caught)
        owner, keys, z, dwell = owner[live], keys[live], z[live], dwell[live]
        if z.size == 0 or step == task.n_max:
            break

        choice = sys.choose(uniforms(keys, step))
        for j, g in enumerate(sys.generators):
            selected = choice == j
            if selected.any():
                z[selected] = evaluate_array(g, z[selected])

    undecided = task.N - escaped - captured
    zero = np.zeros(count, dtype=np.int64)
    if task.target is not None:
        return OrbitCounts(escaped, zero, captured, undecided)
    return OrbitCounts(escaped, captured, zero, undecided)
