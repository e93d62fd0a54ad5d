"""Word syntax, the shift map and the lexicographic order."""

import math
import re

import numpy as np

from devils_coliseum.errors import AlphabetError
from devils_coliseum.symbolic.types import Word

WORD_PATTERN = re.compile(r"^\s*([1-9]*)\s*(?:\(([1-9]+)\))?\s*$")


def parse_word(text: str) -> Word:
    """
    Parse `prefix(cycle)` syntax: `21(1)` is (2,1,1,1,…), `(12)` is (1,2,1,2,…).

    A bare digit string without parentheses is a finite word.
    """
    match = WORD_PATTERN.match(text)
    if not match or not (match.group(1) or match.group(2)):
        raise ValueError(f"invalid word {text!r}; expected digits with an optional (cycle)")
    prefix = tuple(int(c) for c in match.group(1))
    cycle = tuple(int(c) for c in match.group(2) or "")
    return Word(prefix, cycle)


def format_word(word: Word) -> str:
    return str(word)


def check_alphabet(word: Word, m: int) -> None:
    if word.alphabet_size > m:
        raise AlphabetError(f"word {word} uses digits beyond the alphabet 1..{m}")


def shift(word: Word) -> Word:
    """σ: drop the first letter."""
    if word.prefix:
        return Word(word.prefix[1:], word.cycle)
    if word.finite:
        raise ValueError("cannot shift the empty word")
    return Word((), word.cycle[1:] + word.cycle[:1])


def _comparison_length(a: Word, b: Word) -> int:
    """Letters after which two eventually periodic words either differ or coincide forever."""
    return max(len(a.prefix), len(b.prefix)) + math.lcm(len(a.cycle), len(b.cycle))


def compare_lex(a: Word, b: Word) -> int:
    """-1, 0 or 1 as a <_l b, a = b, a >_l b; finite words are completed with 1̄."""
    a, b = a.completed(), b.completed()
    for k in range(_comparison_length(a, b)):
        x, y = a.letter(k), b.letter(k)
        if x != y:
            return -1 if x < y else 1
    return 0


def is_gap_pair(a: Word, b: Word) -> bool:
    """True for (prefix, 1, 2̄) and (prefix, 2, 1̄) in either order."""
    a, b = a.completed(), b.completed()
    if compare_lex(a, b) > 0:
        a, b = b, a
    if a.cycle != (2,) or b.cycle != (1,):
        return False
    stem = a.prefix[:-1] if a.prefix and a.prefix[-1] == 1 else None
    partner = b.prefix[:-1] if b.prefix and b.prefix[-1] == 2 else None
    return stem is not None and stem == partner


def random_word(
    rng: np.random.Generator,
    m: int = 2,
    max_prefix: int = 6,
    max_cycle: int = 6,
) -> Word:
    """Eventually periodic word with uniformly drawn digits and lengths."""
    prefix = rng.integers(1, m + 1, size=int(rng.integers(0, max_prefix + 1)))
    cycle = rng.integers(1, m + 1, size=int(rng.integers(1, max_cycle + 1)))
    return Word(tuple(prefix.tolist()), tuple(cycle.tolist()))
