"""Fiberwise Green function G_γ(y) = lim deg(γ_{n,1})⁻¹ · log⁺|γ_{n,1}(y)|."""

import logging
import math
from collections.abc import Sequence
from typing import TYPE_CHECKING

import numpy as np

from devils_coliseum.errors import AlphabetError
from devils_coliseum.field.types import GridSpec, ScalarField
from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.semigroup.types import GeneratorSystem

if TYPE_CHECKING:
    from devils_coliseum.symbolic.types import Word

logger = logging.getLogger(__name__)

# Past this modulus the orbit is tracked as log|z| through the leading term only.
LOG_SWITCH = 1e12


def _letters(word: "Word | Sequence[int]", n: int, m: int) -> list[int]:
    letters = list(word[:n]) if isinstance(word, Sequence) else list(word.letters(n))
    if len(letters) < n:
        raise ValueError(f"word provides {len(letters)} letters, {n} required")
    if any(not 1 <= d <= m for d in letters):
        raise AlphabetError(f"word uses digits outside 1..{m}: {letters}")
    return letters


def green_values(sys: GeneratorSystem, letters: Sequence[int], z: np.ndarray) -> np.ndarray:
    """Green potential after len(letters) steps at each point of z."""
    z = np.asarray(z, dtype=np.complex128).ravel().copy()
    log_mod = np.zeros(z.size)
    in_log = np.zeros(z.size, dtype=bool)
    log_degree = 0.0

    for letter in letters:
        g = sys.generators[letter - 1]
        d = g.degree
        log_leading = math.log(abs(g.leading))
        log_degree += math.log(d)

        log_mod[in_log] = d * log_mod[in_log] + log_leading
        active = np.flatnonzero(~in_log)
        before = z[active]
        after = evaluate_array(g, before)
        with np.errstate(invalid="ignore", divide="ignore"):
            large = ~np.isfinite(after) | (np.abs(after) > LOG_SWITCH)
            # Saturated images come from large inputs, where the leading term dominates.
            log_mod[active[large]] = np.where(
                np.isfinite(after[large]),
                np.log(np.abs(after[large])),
                d * np.log(np.abs(before[large])) + log_leading,
            )
        in_log[active[large]] = True
        z[active] = after

    with np.errstate(divide="ignore"):
        log_final = np.where(in_log, log_mod, np.log(np.abs(z)))
    positive = np.maximum(log_final, 0.0)
    with np.errstate(divide="ignore"):
        return np.where(positive > 0, np.exp(np.log(positive) - log_degree), 0.0)


def green_field(
    sys: GeneratorSystem,
    word: "Word | Sequence[int]",
    grid: GridSpec,
    n: int,
) -> ScalarField:
    """
    G_γ on a grid for the sequence γ = (h_{w1}, h_{w2}, ...), truncated after n letters.

    word is a Word or a sequence of 1-based generator digits with at least n entries.
    The degree product is accumulated in log space.
    """
    letters = _letters(word, n, sys.m)
    values = green_values(sys, letters, grid.points()).reshape(grid.shape)
    meta = {
        "kind": "green",
        "n": n,
        "letters": "".join(str(d) for d in letters[:32]),
        "system_hash": sys.system_hash(),
    }
    logger.debug("Green field over %d letters: max %.4g", n, float(values.max()))
    return ScalarField(grid, values, np.zeros(grid.shape), meta)
