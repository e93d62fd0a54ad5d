"""Closed-form T-values of component codes and their greedy inversion (m = 2)."""

import logging
import math
from collections.abc import Sequence

from devils_coliseum.errors import AlphabetError, WeightError
from devils_coliseum.symbolic.types import Word
from devils_coliseum.symbolic.words import check_alphabet

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12
PERIOD_TOLERANCE = 1e-9
DEFAULT_INVERT_DEPTH = 64


def _two_weights(p: Sequence[float]) -> tuple[float, float]:
    if len(p) != 2:
        raise AlphabetError(f"component coding needs exactly 2 generators, got {len(p)}")
    p1, p2 = float(p[0]), float(p[1])
    if not (0.0 < p1 < 1.0 and 0.0 < p2 < 1.0) or abs(p1 + p2 - 1.0) > 1e-12:
        raise WeightError(f"weights {tuple(p)} are not an interior point of the simplex")
    return p1, p2


def _affine_block(p: tuple[float, float], digits: Sequence[int]) -> tuple[float, float]:
    """(A, B) with T(digits·v) = A + B·T(v), from T(w) = [w1=2]·p1 + p_{w1}·T(σw)."""
    offset, scale = 0.0, 1.0
    for d in digits:
        if d == 2:
            offset += scale * p[0]
        scale *= p[d - 1]
    return offset, scale


def t_value_of_word(p: Sequence[float], w: Word) -> float:
    """
    T∞,τ on the component of J(G) coded by w, for a two-generator system.

    T(w) = Σ_{n : w_n = 2} p1·Π_{k<n} p_{w_k}; the periodic tail is summed as a
    geometric series. Finite words are read as followed by 1̄.
    """
    weights = _two_weights(p)
    check_alphabet(w, 2)
    w = w.completed()
    cycle_offset, cycle_scale = _affine_block(weights, w.cycle)
    tail = cycle_offset / (1.0 - cycle_scale)
    offset, scale = _affine_block(weights, w.prefix)
    return min(1.0, max(0.0, offset + scale * tail))


def invert_t(
    p: Sequence[float],
    t: float,
    depth: int = DEFAULT_INVERT_DEPTH,
) -> tuple[Word, ...]:
    """
    Words w with t_value_of_word(p, w) = t, by greedy digit extraction.

    Returns the gap pair ((prefix,1,2̄), (prefix,2,1̄)) when the remainder hits p1,
    a single periodic word when the remainder repeats, and otherwise the finite word
    of the first depth digits.
    """
    p1, p2 = _two_weights(p)
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")

    digits: list[int] = []
    states: list[float] = []
    for _ in range(depth):
        if abs(t - p1) <= TIE_TOLERANCE:
            stem = tuple(digits)
            return Word(stem + (1,), (2,)), Word(stem + (2,), (1,))

        for k, previous in enumerate(states):
            if math.isclose(t, previous, rel_tol=0.0, abs_tol=PERIOD_TOLERANCE):
                return (Word(tuple(digits[:k]), tuple(digits[k:])),)
        states.append(t)

        if t < p1:
            digits.append(1)
            t = t / p1
        else:
            digits.append(2)
            t = (t - p1) / p2
        t = min(1.0, max(0.0, t))

    logger.debug("invert_t: no period within %d digits", depth)
    return (Word(tuple(digits)),)
