"""Polynomial arithmetic and single-map dynamics."""

from devils_coliseum.poly.arithmetic import (
    compose,
    compose_word,
    derivative,
    evaluate,
    evaluate_array,
)
from devils_coliseum.poly.dynamics import (
    critical_points,
    critical_values,
    escape_radius,
    filled_julia_membership,
    spherical_deriv_norm,
)
from devils_coliseum.poly.roots import polynomial_roots, preimages, preimages_batch
from devils_coliseum.poly.text import format_polynomial, parse_polynomial
from devils_coliseum.poly.types import AT_INFINITY, OrbitVerdict, Polynomial, VerdictKind

__all__ = [
    "AT_INFINITY",
    "OrbitVerdict",
    "Polynomial",
    "VerdictKind",
    "compose",
    "compose_word",
    "critical_points",
    "critical_values",
    "derivative",
    "escape_radius",
    "evaluate",
    "evaluate_array",
    "filled_julia_membership",
    "format_polynomial",
    "parse_polynomial",
    "polynomial_roots",
    "preimages",
    "preimages_batch",
    "spherical_deriv_norm",
]
