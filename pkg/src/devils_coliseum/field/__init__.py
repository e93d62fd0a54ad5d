"""Raster computations over complex-plane windows."""

from devils_coliseum.field.green import green_field
from devils_coliseum.field.julia import (
    backward_orbit,
    classify_julia,
    julia_backward_cloud,
    julia_value_coverage,
    single_map_cloud,
)
from devils_coliseum.field.masks import (
    annulus_mask,
    disk_mask,
    filled_julia_mask,
    julia_boundary_mask,
    rasterize_points,
)
from devils_coliseum.field.operator import (
    fixed_point_residual,
    operator_apply,
    operator_limit_check,
)
from devils_coliseum.field.render import estimate_T_points, render_T, render_T_target
from devils_coliseum.field.types import GridSpec, RegionMask, ScalarField

__all__ = [
    "GridSpec",
    "RegionMask",
    "ScalarField",
    "annulus_mask",
    "backward_orbit",
    "classify_julia",
    "disk_mask",
    "estimate_T_points",
    "filled_julia_mask",
    "fixed_point_residual",
    "green_field",
    "julia_backward_cloud",
    "julia_boundary_mask",
    "julia_value_coverage",
    "operator_apply",
    "operator_limit_check",
    "rasterize_points",
    "render_T",
    "render_T_target",
    "single_map_cloud",
]
