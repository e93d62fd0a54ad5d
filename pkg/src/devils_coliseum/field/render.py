"""Monte Carlo rendering of escape and target probabilities over a grid."""

import logging
import time

import numpy as np

from devils_coliseum.field.execution import executor_policy, map_chunks
from devils_coliseum.field.orbits import OrbitCounts, OrbitTask, classify_orbits
from devils_coliseum.field.types import GridSpec, ScalarField
from devils_coliseum.semigroup.types import Disk, GeneratorSystem

logger = logging.getLogger(__name__)

# Orbit entries (points x samples) handled by one chunk.
CHUNK_ENTRIES = 1 << 20


def _grid_tasks(
    sys: GeneratorSystem,
    grid: GridSpec,
    N: int,
    n_max: int,
    seed: int,
    target: Disk | None,
) -> list[OrbitTask]:
    rows_per_chunk = max(1, CHUNK_ENTRIES // (grid.width * N))
    tasks = []
    for row in range(0, grid.height, rows_per_chunk):
        stop = min(row + rows_per_chunk, grid.height)
        points = grid.row_points(row, stop).ravel()
        tasks.append(OrbitTask(sys, points, row * grid.width, N, n_max, seed, target))
    return tasks


def _point_tasks(
    sys: GeneratorSystem,
    points: np.ndarray,
    N: int,
    n_max: int,
    seed: int,
    target: Disk | None,
) -> list[OrbitTask]:
    per_chunk = max(1, CHUNK_ENTRIES // N)
    return [
        OrbitTask(sys, points[start : start + per_chunk], start, N, n_max, seed, target)
        for start in range(0, points.size, per_chunk)
    ]


def _run(tasks: list[OrbitTask], workers: int | None) -> OrbitCounts:
    parts = list(map_chunks(classify_orbits, tasks, workers))
    if not parts:
        empty = np.zeros(0, dtype=np.int64)
        return OrbitCounts(empty, empty, empty, empty)
    return OrbitCounts(
        np.concatenate([p.escaped for p in parts]),
        np.concatenate([p.trapped for p in parts]),
        np.concatenate([p.target for p in parts]),
        np.concatenate([p.undecided for p in parts]),
    )


def _validate(N: int, n_max: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")


def _meta(sys: GeneratorSystem, N: int, n_max: int, seed: int, undecided: np.ndarray) -> dict:
    return {
        "seed": int(seed),
        "N": int(N),
        "n_max": int(n_max),
        "system_hash": sys.system_hash(),
        "undecided_mean": float(undecided.mean()) if undecided.size else 0.0,
        "undecided_max": float(undecided.max()) if undecided.size else 0.0,
        "undecided_pixels": int(np.count_nonzero(undecided)),
    }


def render_T(
    sys: GeneratorSystem,
    grid: GridSpec,
    N: int,
    n_max: int,
    seed: int,
    workers: int | None = None,
) -> ScalarField:
    """
    Estimate the escape probability T at every pixel from N random words.

    value = escaped / N; undecided orbits count as non-escaping and are reported in
    the undecided channel. Bit-identical for fixed (sys, grid, N, n_max, seed).
    """
    _validate(N, n_max)
    start = time.perf_counter()
    logger.info(
        "Rendering T: %dx%d, N=%d, n_max=%d, seed=%d, executor=%s",
        grid.width,
        grid.height,
        N,
        n_max,
        seed,
        executor_policy(),
    )

    counts = _run(_grid_tasks(sys, grid, N, n_max, seed, None), workers)
    values = (counts.escaped / N).reshape(grid.shape)
    undecided = (counts.undecided / N).reshape(grid.shape)
    meta = _meta(sys, N, n_max, seed, undecided)
    meta["trapped_mean"] = float((counts.trapped / N).mean())

    logger.info(
        "Rendered T in %.2fs (undecided mean %.4f)",
        time.perf_counter() - start,
        meta["undecided_mean"],
    )
    return ScalarField(grid, values, undecided, meta)


def render_T_target(
    sys: GeneratorSystem,
    grid: GridSpec,
    target: Disk,
    N: int,
    n_max: int,
    seed: int,
    workers: int | None = None,
) -> ScalarField:
    """
    Estimate the probability that an orbit settles in target (T_{A,τ} for A = target).

    Uses the same random streams as render_T, so with a certified trap
    render_T.value + value + undecided = 1 at every pixel.
    """
    _validate(N, n_max)
    logger.info("Rendering target probability for %s: %dx%d, N=%d", target, grid.width, grid.height, N)
    counts = _run(_grid_tasks(sys, grid, N, n_max, seed, target), workers)
    values = (counts.target / N).reshape(grid.shape)
    undecided = (counts.undecided / N).reshape(grid.shape)
    meta = _meta(sys, N, n_max, seed, undecided)
    meta["target"] = {"center": [target.center.real, target.center.imag], "radius": target.radius}
    meta["escaped_mean"] = float((counts.escaped / N).mean())
    return ScalarField(grid, values, undecided, meta)


def estimate_T_points(
    sys: GeneratorSystem,
    points: np.ndarray,
    N: int,
    n_max: int,
    seed: int,
    workers: int | None = None,
) -> OrbitCounts:
    """Outcome counts of N random orbits from each point of an arbitrary point list."""
    _validate(N, n_max)
    points = np.atleast_1d(np.asarray(points, dtype=np.complex128)).ravel()
    return _run(_point_tasks(sys, points, N, n_max, seed, None), workers)
