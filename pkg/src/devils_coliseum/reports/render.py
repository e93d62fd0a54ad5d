"""`render`: T field, Julia mask, backward cloud and metadata."""

import logging
import time

from devils_coliseum.config import RunConfig, build_generator_system
from devils_coliseum.field.export import (
    field_sidecar,
    write_field_csv,
    write_field_pgm,
    write_json,
    write_mask_pgm,
    write_png,
    write_points_csv,
)
from devils_coliseum.field.julia import classify_julia, julia_backward_cloud, julia_value_coverage
from devils_coliseum.field.render import render_T
from devils_coliseum.reports.common import artifact_comment, prepare_output, report_header
from devils_coliseum.reports.types import CommandResult

logger = logging.getLogger(__name__)


def cmd_render(config: RunConfig, workers: int | None = None) -> CommandResult:
    start = time.perf_counter()
    sys = build_generator_system(config.system)
    grid = config.grid.to_grid()
    sampling = config.sampling
    out = config.output
    prepare_output(config)

    T = render_T(sys, grid, sampling.N, sampling.n_max, sampling.seed, workers)
    julia = classify_julia(sys, T, config.analysis.julia_window)
    cloud = julia_backward_cloud(sys, None, config.analysis.cloud_points, sampling.seed)

    result = CommandResult()
    result.paths.append(write_field_pgm(out.artifact("T.pgm"), T, artifact_comment(config, "T", sys)))
    result.paths.append(
        write_mask_pgm(out.artifact("julia.pgm"), julia, artifact_comment(config, "julia", sys))
    )
    result.paths.append(write_points_csv(out.artifact("cloud.csv"), cloud))
    if out.png:
        result.paths.append(write_png(out.artifact("T.png"), T.values))
    if out.csv:
        result.paths.append(write_field_csv(out.artifact("T.csv"), T))

    meta = report_header(config, sys)
    meta["field"] = field_sidecar(T, config.config_hash())
    meta["julia"] = {
        "pixels": julia.count,
        "window": config.analysis.julia_window,
        "value_coverage": julia_value_coverage(T, julia),
    }
    meta["cloud"] = {"points": int(cloud.size)}
    result.paths.append(write_json(out.artifact("meta.json"), meta))

    result.summary = {
        "command": "render",
        "files": [str(p) for p in result.paths],
        "undecided_mean": T.meta["undecided_mean"],
    }
    logger.info("Render finished in %.2fs: %d files", time.perf_counter() - start, len(result.paths))
    return result
