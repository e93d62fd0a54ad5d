"""`classify3`: add a third generator and decide its trichotomy case at several resolutions."""

import logging

from devils_coliseum.config import RunConfig, build_generator_system
from devils_coliseum.errors import ColiseumError, ConfigError, DisconnectedMask, TrichotomyViolation
from devils_coliseum.field.export import write_json
from devils_coliseum.field.types import GridSpec
from devils_coliseum.poly.text import parse_polynomial
from devils_coliseum.reports.common import julia_proxy, prepare_output, report_header
from devils_coliseum.reports.types import CommandResult
from devils_coliseum.semigroup.system import build_system, with_certified_trap
from devils_coliseum.semigroup.types import GeneratorSystem
from devils_coliseum.symbolic.order import classify_3gen

logger = logging.getLogger(__name__)


def extended_system(config: RunConfig) -> GeneratorSystem:
    """The configured system plus classify3.extra, with equal weights unless given."""
    base = build_generator_system(config.system)
    section = config.classify3
    try:
        extra = parse_polynomial(section.extra)
        generators = (*base.generators, extra)
        weights = section.weights or tuple(1.0 / len(generators) for _ in generators)
        sys = build_system(generators, weights, name=f"{base.name}+{section.extra}")
    except (ColiseumError, ValueError) as exc:
        raise ConfigError(f"classify3: {exc}") from exc
    if sys.m != 3:
        raise ConfigError(f"classify3 needs a 2-generator base system, got {base.m}")
    if base.trap_region is not None:
        sys = with_certified_trap(sys, base.trap_region)
    return sys


def cmd_classify3(config: RunConfig, workers: int | None = None) -> CommandResult:
    sys = extended_system(config)
    section = config.classify3
    prepare_output(config)

    runs = []
    for size in section.sizes:
        grid = GridSpec(*config.grid.rect, size, size)
        proxy, _ = julia_proxy(sys, grid, section.cloud_points, config.sampling.seed, section.dilate)
        try:
            entry = classify_3gen(sys, proxy).to_dict()
        except TrichotomyViolation as exc:
            logger.error("Trichotomy violated at %dx%d: %s", size, size, exc)
            entry = {"case": None, "error": str(exc)}
        except DisconnectedMask as exc:
            logger.warning("Julia sets not resolved at %dx%d: %s", size, size, exc)
            entry = {"case": None, "error": str(exc)}
        runs.append({"size": size, **entry})

    cases = {run["case"] for run in runs}
    stable = len(cases) == 1 and None not in cases
    report = report_header(config, sys)
    report["runs"] = runs
    report["stable"] = stable
    report["case"] = runs[0]["case"] if stable else None

    result = CommandResult(ok=stable)
    result.paths.append(write_json(config.output.artifact("classify3.json"), report))
    result.summary = {
        "command": "classify3",
        "files": [str(p) for p in result.paths],
        "case": report["case"],
        "stable": stable,
    }
    return result
