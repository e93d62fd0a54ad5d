"""Helpers shared by the command implementations."""

import logging
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from devils_coliseum.config import RunConfig
from devils_coliseum.field.julia import julia_backward_cloud
from devils_coliseum.field.masks import annulus_mask, rasterize_points
from devils_coliseum.field.render import render_T
from devils_coliseum.field.types import GridSpec, RegionMask, ScalarField
from devils_coliseum.semigroup.types import GeneratorSystem

logger = logging.getLogger(__name__)


def prepare_output(config: RunConfig) -> Path:
    path = config.output.path
    path.mkdir(parents=True, exist_ok=True)
    return path


def artifact_comment(config: RunConfig, kind: str, sys: GeneratorSystem | None = None) -> str:
    lines = [f"devils-coliseum {kind}", f"config_hash {config.config_hash()}"]
    if sys is not None:
        lines.append(f"system_hash {sys.system_hash()}")
    return "\n".join(lines)


def report_header(config: RunConfig, sys: GeneratorSystem | None = None) -> dict:
    header: dict = {"config_hash": config.config_hash(), "config": config.to_dict()}
    if sys is not None:
        header["system"] = sys.to_dict()
    return header


def julia_proxy(
    sys: GeneratorSystem,
    grid: GridSpec,
    points: int,
    seed: int,
    dilate: int = 2,
) -> tuple[RegionMask, np.ndarray]:
    """Rasterised backward cloud, dilated, standing in for J(G) on grid."""
    cloud = julia_backward_cloud(sys, None, points, seed)
    return rasterize_points(grid, cloud, dilate), cloud


def annulus_masks(grid: GridSpec, annuli: Sequence[tuple[float, float]]) -> list[RegionMask]:
    """Masks for (inner, outer) radius pairs about 0; inner 0 gives a disk."""
    return [annulus_mask(grid, inner, outer) for inner, outer in annuli]


def render_config_field(config: RunConfig, sys: GeneratorSystem, workers: int | None) -> ScalarField:
    sampling = config.sampling
    return render_T(sys, config.grid.to_grid(), sampling.N, sampling.n_max, sampling.seed, workers)
