"""Simultaneous polynomial root finding (Aberth–Ehrlich iteration)."""

import logging

import numpy as np
from numpy.polynomial import polynomial as npp

from devils_coliseum.errors import RootSolveFailure
from devils_coliseum.poly.types import Polynomial

logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-12
MAX_SWEEPS = 200

# Angular offset of the initial circle; keeps starts off the real axis symmetry.
_START_PHASE = 0.4


def _initial_guesses(monic: np.ndarray) -> np.ndarray:
    """Points on a perturbed circle around the root centroid, one circle per row."""
    batch, width = monic.shape
    degree = width - 1
    centroid = -monic[:, degree - 1] / degree

    powers = np.arange(degree, 0, -1, dtype=np.float64)
    with np.errstate(divide="ignore"):
        radius = np.max(np.abs(monic[:, :degree]) ** (1.0 / powers), axis=1)
    radius = np.where(radius > 0, radius, 1.0)

    k = np.arange(degree)
    angles = 2.0 * np.pi * k / degree + _START_PHASE
    # Mild radial perturbation breaks symmetric configurations.
    scale = 1.0 + 0.01 * k / degree
    circle = np.exp(1j * angles) * scale
    return centroid[:, None] + radius[:, None] * circle[None, :]


def _horner_with_derivative(monic: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate p and p' for every row of coefficients at every root estimate of that row."""
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    for c in monic.T[::-1]:
        dp = dp * z + p
        p = p * z + c[:, None]
    return p, dp


def aberth_batch(
    coeffs: np.ndarray,
    tol: float = ROOT_TOLERANCE,
    max_sweeps: int = MAX_SWEEPS,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Find all roots of a batch of polynomials of equal degree.

    Args:
        coeffs: (batch, degree + 1) ascending coefficients; leading entries non-zero.

    Returns:
        (roots, converged): roots has shape (batch, degree); converged flags the
        rows whose Aberth corrections all fell below tol (relative to max(1, |z|)).
    """
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=np.complex128))
    batch, width = coeffs.shape
    degree = width - 1
    if degree < 1:
        raise ValueError("polynomials of degree < 1 have no roots to find")

    monic = coeffs / coeffs[:, -1:]
    if degree == 1:
        return -monic[:, :1], np.ones(batch, dtype=bool)

    z = _initial_guesses(monic)
    converged = np.zeros(batch, dtype=bool)
    eye = np.eye(degree, dtype=bool)

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for _ in range(max_sweeps):
            active = ~converged
            if not active.any():
                break

            za = z[active]
            p, dp = _horner_with_derivative(monic[active], za)
            ratio = p / dp

            diff = za[:, :, None] - za[:, None, :]
            inv = np.where(eye[None, :, :], 0, 1.0 / diff)
            sums = inv.sum(axis=2)
            step = ratio / (1.0 - ratio * sums)
            # Stationary points of p: nudge instead of dividing by zero.
            step = np.where(np.isfinite(step), step, 1e-3 * (1 + np.abs(za)))

            za = za - step
            z[active] = za
            done = np.all(np.abs(step) <= tol * np.maximum(1.0, np.abs(za)), axis=1)
            converged[np.flatnonzero(active)[done]] = True

    return z, converged


def polynomial_roots(g: Polynomial) -> np.ndarray:
    """
    All roots of one polynomial, with multiplicity.

    Roots at the origin are split off exactly; the rest go through Aberth–Ehrlich,
    with a companion-matrix fallback when the iteration stalls on a multiple root.
    """
    coeffs = list(g.coeffs)
    if g.degree < 1:
        return np.zeros(0, dtype=np.complex128)

    zeros = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1

    origin = np.zeros(zeros, dtype=np.complex128)
    if len(coeffs) == 1:
        return origin

    roots, converged = aberth_batch(np.asarray(coeffs)[None, :])
    if not converged[0]:
        logger.warning("Aberth iteration stalled for %s; falling back to companion roots", g)
        roots = npp.polyroots(np.asarray(coeffs, dtype=np.complex128))[None, :]
    return np.concatenate([origin, roots[0]])


def preimages(g: Polynomial, w: complex) -> np.ndarray:
    """All solutions ζ of g(ζ) = w. Raises RootSolveFailure when the iteration fails."""
    coeffs = g.as_array().copy()
    coeffs[0] -= w
    roots, converged = aberth_batch(coeffs[None, :])
    if not converged[0]:
        raise RootSolveFailure(f"no convergence solving g(z) = {w!r}")
    return roots[0]


def preimages_batch(g: Polynomial, targets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Solve g(ζ) = w for every w in targets at once; returns (roots, converged)."""
    targets = np.asarray(targets, dtype=np.complex128)
    coeffs = np.tile(g.as_array(), (targets.size, 1))
    coeffs[:, 0] -= targets
    return aberth_batch(coeffs)
