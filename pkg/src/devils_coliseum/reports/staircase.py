"""`staircase`: sweep a 1-D singular function and describe the attractor of the Ψ-shadow."""

import logging

import numpy as np

from devils_coliseum.affine.psi import mpsi_attractor
from devils_coliseum.affine.staircase import CANTOR_MAPS, lebesgue_maps, staircase_sweep
from devils_coliseum.affine.types import AffineMap
from devils_coliseum.config import RunConfig, StaircaseConfig, build_generator_system
from devils_coliseum.errors import ConfigError
from devils_coliseum.field.export import write_json
from devils_coliseum.reports.common import prepare_output, report_header
from devils_coliseum.reports.types import CommandResult

logger = logging.getLogger(__name__)


def staircase_system(section: StaircaseConfig) -> tuple[tuple[AffineMap, ...], tuple[float, float]]:
    match section.system:
        case "cantor":
            return CANTOR_MAPS, (0.5, 0.5)
        case "lebesgue":
            if not 0.0 < section.a < 1.0:
                raise ConfigError(f"staircase.a must lie in (0, 1), got {section.a}")
            return lebesgue_maps(), (section.a, 1.0 - section.a)
    raise ConfigError(f"unknown staircase.system {section.system!r}; expected 'cantor' or 'lebesgue'")


def cmd_staircase(config: RunConfig, workers: int | None = None) -> CommandResult:
    section = config.staircase
    maps, probs = staircase_system(section)
    if section.points < 2:
        raise ConfigError("staircase.points must be >= 2")
    if section.mode not in ("exact", "monte-carlo"):
        raise ConfigError(f"unknown staircase.mode {section.mode!r}")
    out = config.output
    prepare_output(config)

    xs = np.linspace(0.0, 1.0, section.points)
    values = staircase_sweep(
        maps,
        probs,
        xs,
        mode=section.mode,
        depth=section.depth,
        samples=section.samples,
        n_max=section.n_max,
        seed=config.sampling.seed,
    )
    result = CommandResult()
    csv_path = out.artifact("staircase.csv")
    np.savetxt(
        csv_path,
        np.column_stack([xs, values]),
        delimiter=",",
        header=f"# config_hash {config.config_hash()}\nx,value",
        comments="",
        fmt="%.17g",
    )
    result.paths.append(csv_path)

    sys = build_generator_system(config.system)
    attractor = report_header(config, sys)
    attractor["attractor"] = mpsi_attractor(sys, section.attractor_depth).to_dict()
    result.paths.append(write_json(out.artifact("attractor.json"), attractor))

    result.summary = {"command": "staircase", "files": [str(p) for p in result.paths]}
    logger.info("Staircase %s (%s) at %d points", section.system, section.mode, section.points)
    return result
