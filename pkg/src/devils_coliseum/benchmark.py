"""
Executor and worker-count benchmark for field rendering.

Runs `devils-coliseum render` on one configuration under every combination of
execution policy (COLISEUM_EXECUTOR) and worker count (COLISEUM_WORKERS), with
multiple trials, and reports median wall time and peak RSS of the process tree.
Every run must produce the same T image; differing hashes fail the benchmark.

Note: This module requires the 'benchmark' optional dependency:
    uv pip install -e ".[benchmark]"
"""

import argparse
import contextlib
import hashlib
import logging
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path
from statistics import median

from devils_coliseum.field.execution import EXECUTOR_ENV, WORKERS_ENV

try:
    import psutil
except ImportError:
    psutil = None  # type: ignore[assignment]

logger = logging.getLogger(__name__)

EXECUTORS = ("serial", "threads", "processes")
PREFIX = "bench"


def _check_psutil() -> None:
    """Check that psutil is available, exit with helpful message if not."""
    if psutil is None:
        sys.stderr.write("ERROR: psutil is required for process-tree memory benchmarking.\n")
        sys.stderr.write("Install with: uv pip install -e '.[benchmark]'\n")
        sys.exit(1)


def _tree_rss(root: "psutil.Process") -> int:
    total = 0
    with contextlib.suppress(psutil.NoSuchProcess, psutil.AccessDenied):
        total += root.memory_info().rss
    try:
        for child in root.children(recursive=True):
            with contextlib.suppress(psutil.NoSuchProcess, psutil.AccessDenied):
                total += child.memory_info().rss
    except (psutil.NoSuchProcess, psutil.AccessDenied):
        pass
    return total


def measure_peak_rss_tree(proc: subprocess.Popen, poll_interval_s: float) -> int:
    """Peak summed RSS of proc and all its descendants, sampled until it exits."""
    _check_psutil()
    try:
        root = psutil.Process(proc.pid)
    except psutil.NoSuchProcess:
        return 0

    peak = 0
    while proc.poll() is None:
        peak = max(peak, _tree_rss(root))
        time.sleep(poll_interval_s)
    return peak


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()[:16]


def run_render(
    config: str,
    executor: str,
    workers: int,
    overrides: list[str],
    mem_sample_ms: int,
) -> dict:
    """One `render` subprocess; returns its wall time, peak RSS and T-image digest."""
    label = f"{executor}x{workers}"
    env = os.environ.copy()
    env[EXECUTOR_ENV] = executor
    env[WORKERS_ENV] = str(workers)

    with tempfile.TemporaryDirectory(prefix="coliseum-bench-") as out_dir:
        env["COLISEUM_OUTPUT_DIR"] = out_dir
        cmd = [
            sys.executable,
            "-m",
            "devils_coliseum",
            "render",
            config,
            "--log-level",
            "WARNING",
            "--set",
            f"output.prefix={PREFIX}",
        ]
        for override in overrides:
            cmd += ["--set", override]

        start = time.perf_counter()
        proc = subprocess.Popen(cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True, env=env)
        peak = measure_peak_rss_tree(proc, mem_sample_ms / 1000.0)
        _, stderr = proc.communicate()
        seconds = time.perf_counter() - start

        if proc.returncode != 0:
            logger.error("Render failed (%s, exit %d):", label, proc.returncode)
            logger.error("%s", stderr)
            sys.exit(1)
        digest = file_digest(Path(out_dir) / f"{PREFIX}_T.pgm")

    return {"mode": label, "seconds": seconds, "peak_rss_tree_mib": peak / (1024 * 1024), "digest": digest}


def compute_stats(results: list[dict]) -> dict:
    """Compute statistics from a list of benchmark results."""
    times = [r["seconds"] for r in results]
    return {
        "median_time": median(times),
        "min_time": min(times),
        "max_time": max(times),
        "median_rss_tree": median(r["peak_rss_tree_mib"] for r in results),
        "digests": {r["digest"] for r in results},
    }


def run_matrix(
    config: str,
    modes: list[tuple[str, int]],
    overrides: list[str],
    mem_sample_ms: int,
    num_trials: int,
    num_warmup: int,
) -> bool:
    """Time every mode, rotating the order each trial; True when all images match."""
    logger.info("Warming up (%d run(s) per mode, not counted)...", num_warmup)
    for _ in range(num_warmup):
        for executor, workers in modes:
            run_render(config, executor, workers, overrides, mem_sample_ms)

    results: dict[tuple[str, int], list[dict]] = {mode: [] for mode in modes}
    logger.info("Running %d trials (rotating order to reduce bias)...", num_trials)
    for trial in range(1, num_trials + 1):
        rotation = (trial - 1) % len(modes)
        for mode in modes[rotation:] + modes[:rotation]:
            results[mode].append(run_render(config, *mode, overrides, mem_sample_ms))
        logger.info(
            "  Trial %d/%d: %s",
            trial,
            num_trials,
            ", ".join(f"{e}x{w}={results[(e, w)][-1]['seconds']:.2f}s" for e, w in modes),
        )

    stats = {mode: compute_stats(results[mode]) for mode in modes}
    baseline = stats[modes[0]]["median_time"]

    logger.info("=" * 80)
    logger.info(
        "%s %s %s %s %s %s %s",
        "Executor".ljust(11),
        "Workers".ljust(8),
        "Median(s)".ljust(10),
        "Min(s)".ljust(8),
        "Max(s)".ljust(8),
        "RSS(MiB)".ljust(9),
        "Speedup",
    )
    logger.info("-" * 80)
    for (executor, workers), s in stats.items():
        speedup = baseline / s["median_time"] if s["median_time"] > 0 else float("inf")
        logger.info(
            "%s %s %s %s %s %s %.2fx",
            executor.ljust(11),
            str(workers).ljust(8),
            f"{s['median_time']:.3f}".ljust(10),
            f"{s['min_time']:.3f}".ljust(8),
            f"{s['max_time']:.3f}".ljust(8),
            f"{s['median_rss_tree']:.1f}".ljust(9),
            speedup,
        )
    logger.info("=" * 80)

    digests = set().union(*(s["digests"] for s in stats.values()))
    if len(digests) > 1:
        logger.error("T images differ between runs: %s", sorted(digests))
        return False
    logger.info("All runs produced the same T image (%s)", digests.pop())
    return True


def main() -> int:
    """Entry point for benchmark CLI."""
    _check_psutil()

    parser = argparse.ArgumentParser(
        description="Benchmark T-field rendering across executors and worker counts."
    )
    parser.add_argument("config", help="Path to the TOML run configuration")
    parser.add_argument("--trials", type=int, default=5, help="Timed trials per mode (default: 5)")
    parser.add_argument("--warmup", type=int, default=1, help="Warm-up runs per mode (default: 1)")
    parser.add_argument(
        "--executors",
        nargs="+",
        choices=EXECUTORS,
        default=list(EXECUTORS),
        help="Execution policies to compare (default: all)",
    )
    parser.add_argument(
        "--workers",
        nargs="+",
        type=int,
        default=[1, 4, 8],
        help="Worker counts to compare (default: 1 4 8)",
    )
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="SECTION.KEY=VALUE",
        help="Configuration override passed through to render (repeatable)",
    )
    parser.add_argument(
        "--mem-sample-ms",
        type=int,
        default=75,
        help="Memory sampling interval in milliseconds (default: 75)",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="INFO",
        help="Logging level (default: INFO)",
    )
    args = parser.parse_args()

    logging.basicConfig(level=getattr(logging, args.log_level), format="%(message)s", stream=sys.stderr)

    if not Path(args.config).exists():
        logger.error("Config file not found: %s", args.config)
        return 1
    if any(w < 1 for w in args.workers):
        parser.error("--workers values must be >= 1")

    # Serial ignores the worker count, so it is timed once.
    modes = [
        (executor, workers)
        for executor in args.executors
        for workers in ([1] if executor == "serial" else args.workers)
    ]

    logger.info("=" * 80)
    logger.info("Render benchmark: %s", args.config)
    logger.info("Trials: %d | Warm-up runs: %d | Modes: %d", args.trials, args.warmup, len(modes))
    logger.info("Memory sampling: %dms interval (process-tree RSS via psutil)", args.mem_sample_ms)
    logger.info("Python: %s", sys.executable)
    logger.info("")

    ok = run_matrix(args.config, modes, args.overrides, args.mem_sample_ms, args.trials, args.warmup)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
