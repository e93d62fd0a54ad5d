"""How per-chunk raster work is spread over workers.

The policy is ``COLISEUM_EXECUTOR`` when set ("threads", "processes" or "serial"),
otherwise threads on free-threaded builds and processes elsewhere. Chunk results
never depend on it.
"""

import logging
import os
import sys
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor

logger = logging.getLogger(__name__)

EXECUTOR_ENV = "COLISEUM_EXECUTOR"
WORKERS_ENV = "COLISEUM_WORKERS"

# Each process receives this many chunks per dispatch.
PROCESS_POOL_CHUNKSIZE = 4

POLICIES: dict[str, type[Executor] | None] = {
    "threads": ThreadPoolExecutor,
    "processes": ProcessPoolExecutor,
    "serial": None,
}


def free_threaded() -> bool:
    return not getattr(sys, "_is_gil_enabled", lambda: True)()


def executor_policy() -> str:
    """Name of the policy map_chunks will use."""
    requested = os.environ.get(EXECUTOR_ENV, "").strip().lower()
    if requested in POLICIES:
        return requested
    if requested:
        logger.warning("Ignoring %s=%r; expected one of %s", EXECUTOR_ENV, requested, ", ".join(POLICIES))
    return "threads" if free_threaded() else "processes"


def resolve_workers(workers: int | None = None) -> int | None:
    """Explicit worker count, else COLISEUM_WORKERS, else the executor default."""
    if workers is not None:
        return workers
    env = os.environ.get(WORKERS_ENV, "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            logger.warning("Ignoring %s=%r: not an integer", WORKERS_ENV, env)
    return None


def map_chunks[T, R](
    func: Callable[[T], R],
    chunks: Iterable[T],
    workers: int | None = None,
) -> Iterator[R]:
    """Map func over chunks in input order; one worker always runs in the calling thread."""
    executor_class = POLICIES[executor_policy()]
    workers = resolve_workers(workers)
    if executor_class is None or workers == 1:
        yield from map(func, chunks)
        return

    with executor_class(max_workers=workers) as executor:
        chunksize = PROCESS_POOL_CHUNKSIZE if executor_class is ProcessPoolExecutor else 1
        yield from executor.map(func, chunks, chunksize=chunksize)
