"""Polynomial evaluation, composition and differentiation."""

import cmath
from collections.abc import Sequence

import numpy as np
from numpy.polynomial import polynomial as npp

from devils_coliseum.errors import DegreeError
from devils_coliseum.poly.types import (
    AT_INFINITY,
    COMPOSITION_DEGREE_CAP,
    SATURATION_MODULUS,
    Polynomial,
)


def evaluate(g: Polynomial, z: complex) -> complex:
    """
    Horner evaluation of g at z.

    Inputs or results beyond SATURATION_MODULUS (or non-finite) saturate to
    AT_INFINITY.
    """
    z = complex(z)
    if not cmath.isfinite(z) or abs(z) > SATURATION_MODULUS:
        return AT_INFINITY

    result = 0j
    for c in reversed(g.coeffs):
        result = result * z + c

    if not cmath.isfinite(result) or abs(result) > SATURATION_MODULUS:
        return AT_INFINITY
    return result


def evaluate_array(g: Polynomial, z: np.ndarray) -> np.ndarray:
    """Vectorised evaluate(); saturated entries come back as AT_INFINITY."""
    z = np.asarray(z, dtype=np.complex128)
    with np.errstate(over="ignore", invalid="ignore"):
        saturated = ~np.isfinite(z) | (np.abs(z) > SATURATION_MODULUS)
        safe = np.where(saturated, 0, z)

        result = np.zeros_like(safe)
        for c in reversed(g.coeffs):
            result = result * safe + c

        saturated |= ~np.isfinite(result) | (np.abs(result) > SATURATION_MODULUS)
    result[saturated] = AT_INFINITY
    return result


def compose(g: Polynomial, h: Polynomial, degree_cap: int = COMPOSITION_DEGREE_CAP) -> Polynomial:
    """
    Return g∘h, i.e. z ↦ g(h(z)).

    Raises DegreeError when the composed degree exceeds degree_cap.
    """
    degree = g.degree * h.degree
    if degree > degree_cap:
        raise DegreeError(
            f"composition degree {degree} exceeds cap {degree_cap}; iterate the word instead"
        )

    inner = h.as_array()
    result = np.array([g.coeffs[-1]], dtype=np.complex128)
    for c in reversed(g.coeffs[:-1]):
        result = npp.polyadd(npp.polymul(result, inner), [c])
    return Polynomial.from_coeffs(result)


def compose_word(
    maps: Sequence[Polynomial],
    degree_cap: int = COMPOSITION_DEGREE_CAP,
) -> Polynomial:
    """
    Compose maps applied left to right: maps[0] first, maps[-1] last.

    Returns maps[-1] ∘ ... ∘ maps[0].
    """
    if not maps:
        raise ValueError("cannot compose an empty word")

    total = 1
    for g in maps:
        total *= g.degree
    if total > degree_cap:
        raise DegreeError(f"word degree {total} exceeds cap {degree_cap}")

    result = maps[0]
    for g in maps[1:]:
        result = compose(g, result, degree_cap)
    return result


def derivative(g: Polynomial) -> Polynomial:
    """Formal derivative; a constant yields the zero polynomial."""
    if g.degree == 0:
        return Polynomial((0j,))
    return Polynomial.from_coeffs(npp.polyder(g.as_array()))
