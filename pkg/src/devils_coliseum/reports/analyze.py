"""`analyze`: exponents, level-set words, order audit, Hölder and kernel evidence."""

import logging
import math
import time

import numpy as np

from devils_coliseum.affine.psi import mpsi_attractor
from devils_coliseum.config import RunConfig, build_generator_system
from devils_coliseum.errors import DisconnectedMask, OrderViolation, TrichotomyViolation
from devils_coliseum.field.export import write_json
from devils_coliseum.field.julia import julia_backward_cloud
from devils_coliseum.field.types import ScalarField
from devils_coliseum.reports.common import (
    annulus_masks,
    julia_proxy,
    prepare_output,
    render_config_field,
    report_header,
)
from devils_coliseum.reports.types import CommandResult
from devils_coliseum.semigroup.search import postcritical_sample
from devils_coliseum.semigroup.types import GeneratorSystem
from devils_coliseum.symbolic.coding import invert_t, t_value_of_word
from devils_coliseum.symbolic.components import sample_lambda_typical
from devils_coliseum.symbolic.exponents import dim_lower_bound, sum_inv_deg, u_exponent
from devils_coliseum.symbolic.holder import empirical_holder
from devils_coliseum.symbolic.kernel import kernel_julia_probe
from devils_coliseum.symbolic.order import classify_3gen, monotonicity_audit
from devils_coliseum.symbolic.types import HolderEstimate
from devils_coliseum.symbolic.words import parse_word

logger = logging.getLogger(__name__)


def holder_survey(T: ScalarField, points: np.ndarray) -> dict:
    """Hölder fits at every point far enough from the window edge, with summary statistics."""
    estimates: list[HolderEstimate] = []
    skipped = 0
    for z in points:
        try:
            estimates.append(empirical_holder(T, complex(z)))
        except ValueError:
            skipped += 1

    reliable = [e.exponent for e in estimates if e.reliable and math.isfinite(e.exponent)]
    return {
        "points": len(estimates),
        "skipped": skipped,
        "reliable": len(reliable),
        "median": float(np.median(reliable)) if reliable else math.nan,
        "below_one": float(np.mean(np.asarray(reliable) < 1.0)) if reliable else math.nan,
        "estimates": [e.to_dict() for e in estimates],
    }


def exponent_section(sys: GeneratorSystem) -> dict:
    u = u_exponent(sys.degrees, sys.weights)
    return {
        "u": u.to_dict(),
        "dim_lower_bound": dim_lower_bound(sys.degrees, sys.weights),
        "sum_inv_deg": sum_inv_deg(sys.degrees),
    }


def word_section(config: RunConfig, sys: GeneratorSystem) -> dict:
    analysis = config.analysis
    table = []
    for t in analysis.t_values:
        words = invert_t(sys.weights, t, analysis.invert_depth)
        table.append({"t": t, "words": [str(w) for w in words], "gap_pair": len(words) == 2})
    values = []
    for text in analysis.words:
        w = parse_word(text)
        values.append({"word": str(w), "t_value": t_value_of_word(sys.weights, w)})
    return {"invert_t": table, "t_values": values}


def cmd_analyze(config: RunConfig, workers: int | None = None) -> CommandResult:
    start = time.perf_counter()
    sys = build_generator_system(config.system)
    analysis = config.analysis
    sampling = config.sampling
    out = config.output
    prepare_output(config)

    report = report_header(config, sys)
    report["exponents"] = exponent_section(sys)
    if sys.m == 2:
        report.update(word_section(config, sys))
    report["attractor"] = mpsi_attractor(sys, config.staircase.attractor_depth).to_dict()

    postcritical = postcritical_sample(sys)
    report["postcritical"] = {
        "verdict": str(postcritical.verdict),
        "label": postcritical.label,
        "points": int(postcritical.points.size),
    }

    T = render_config_field(config, sys, workers)
    grid = T.grid
    try:
        audit = monotonicity_audit(sys, T, annulus_masks(grid, analysis.annuli))
        report["monotonicity"] = audit.to_dict()
    except OrderViolation as exc:
        logger.warning("Monotonicity audit failed: %s", exc)
        report["monotonicity"] = {"passed": False, "error": str(exc), "pair": list(exc.pair)}
    except ValueError as exc:
        logger.warning("Monotonicity audit skipped: %s", exc)
        report["monotonicity"] = {"passed": None, "error": str(exc)}

    lam = sample_lambda_typical(sys, analysis.holder_points, analysis.lambda_word_len, sampling.seed)
    report["holder"] = holder_survey(T, lam)

    cloud = julia_backward_cloud(sys, None, analysis.kernel_points, sampling.seed)
    report["kernel"] = kernel_julia_probe(sys, cloud, analysis.kernel_depth).to_dict()

    if sys.m == 3:
        proxy, _ = julia_proxy(sys, grid, config.classify3.cloud_points, sampling.seed, config.classify3.dilate)
        try:
            report["trichotomy"] = classify_3gen(sys, proxy).to_dict()
        except (TrichotomyViolation, DisconnectedMask) as exc:
            report["trichotomy"] = {"case": None, "error": str(exc)}

    result = CommandResult()
    result.paths.append(write_json(out.artifact("analysis.json"), report))
    result.summary = {
        "command": "analyze",
        "files": [str(p) for p in result.paths],
        "u": report["exponents"]["u"]["value"],
        "dim_lower_bound": report["exponents"]["dim_lower_bound"],
    }
    logger.info("Analysis finished in %.2fs", time.perf_counter() - start)
    return result
