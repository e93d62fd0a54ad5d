"""Single-map dynamics: spherical derivative, escape radii, filled-Julia membership."""

from collections.abc import Sequence

import numpy as np

from devils_coliseum.poly.arithmetic import derivative, evaluate
from devils_coliseum.poly.roots import polynomial_roots
from devils_coliseum.poly.types import OrbitVerdict, Polynomial, VerdictKind


def spherical_deriv_norm(g: Polynomial, z: complex) -> float:
    """‖Dg_z‖ in the spherical metric: |g'(z)|·(1+|z|²)/(1+|g(z)|²)."""
    gz = evaluate(g, z)
    dgz = evaluate(derivative(g), z)
    if np.isinf(abs(gz)):
        return 0.0
    return abs(dgz) * (1.0 + abs(z) ** 2) / (1.0 + abs(gz) ** 2)


def escape_radius(gs: Sequence[Polynomial]) -> float:
    """
    Radius R with |z| ≥ R ⇒ |h(z)| ≥ 2|z| for every h in gs.

    R = max_j max(1, (2 + Σ_{k<d} |c_k|) / |a(h_j)|).
    """
    radius = 1.0
    for g in gs:
        lower = sum(abs(c) for c in g.coeffs[:-1])
        radius = max(radius, (2.0 + lower) / abs(g.leading))
    return radius


def filled_julia_membership(g: Polynomial, z: complex, n_max: int, R: float) -> OrbitVerdict:
    """Escaped(n) at the first n ≤ n_max with |gⁿ(z)| > R, else Undecided(n_max)."""
    current = complex(z)
    for n in range(n_max + 1):
        if abs(current) > R:
            return OrbitVerdict(VerdictKind.ESCAPED, n)
        if n < n_max:
            current = evaluate(g, current)
    return OrbitVerdict(VerdictKind.UNDECIDED, n_max)


def critical_points(g: Polynomial) -> np.ndarray:
    """Finite critical points (roots of g'), with multiplicity."""
    return polynomial_roots(derivative(g))


def critical_values(g: Polynomial) -> np.ndarray:
    """Images of the finite critical points, duplicates collapsed."""
    values = [evaluate(g, c) for c in critical_points(g)]
    unique: list[complex] = []
    for v in values:
        if all(abs(v - u) > 1e-9 * (1 + abs(u)) for u in unique):
            unique.append(v)
    return np.asarray(unique, dtype=np.complex128)
