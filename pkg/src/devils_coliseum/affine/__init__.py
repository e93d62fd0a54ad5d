"""The real-affine shadow of a generator system and 1-D singular functions."""

from devils_coliseum.affine.psi import mpsi_attractor, psi, shadow_ifs
from devils_coliseum.affine.staircase import (
    CANTOR_MAPS,
    StaircaseMode,
    lebesgue_maps,
    staircase_sweep,
    staircase_T,
)
from devils_coliseum.affine.types import AffineMap, IntervalIFS

__all__ = [
    "CANTOR_MAPS",
    "AffineMap",
    "IntervalIFS",
    "StaircaseMode",
    "lebesgue_maps",
    "mpsi_attractor",
    "psi",
    "shadow_ifs",
    "staircase_T",
    "staircase_sweep",
]
