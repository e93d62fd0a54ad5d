"""Tests for closed-form t-values and their inversion."""

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from devils_coliseum.errors import AlphabetError, WeightError
from devils_coliseum.symbolic.coding import invert_t, t_value_of_word
from devils_coliseum.symbolic.types import Word

HALF = (0.5, 0.5)


def test_constant_words_give_the_extremes() -> None:
    assert t_value_of_word(HALF, Word.periodic(1)) == 0.0
    assert t_value_of_word(HALF, Word.periodic(2)) == 1.0
    assert t_value_of_word((0.3, 0.7), Word.periodic(2)) == pytest.approx(1.0)


def test_gap_pair_shares_the_value_p1() -> None:
    p = (0.3, 0.7)
    assert t_value_of_word(p, Word((1,), (2,))) == pytest.approx(0.3)
    assert t_value_of_word(p, Word((2,), (1,))) == pytest.approx(0.3)


def test_periodic_word_closed_form() -> None:
    p = (0.3, 0.7)
    # T(12 12 ...) = p1 * p1 / (1 - p1 * p2)
    assert t_value_of_word(p, Word.periodic(1, 2)) == pytest.approx(0.09 / 0.79)


def test_finite_word_is_read_with_trailing_ones() -> None:
    assert t_value_of_word(HALF, Word((2, 2))) == t_value_of_word(HALF, Word((2, 2), (1,)))
    assert t_value_of_word(HALF, Word((2, 2))) == pytest.approx(0.75)


def test_invert_half_returns_the_gap_pair() -> None:
    assert invert_t(HALF, 0.5) == (Word((1,), (2,)), Word((2,), (1,)))


def test_invert_detects_periodic_remainders() -> None:
    p = (0.3, 0.7)
    t = t_value_of_word(p, Word.periodic(1, 2))
    assert invert_t(p, t) == (Word.periodic(1, 2),)


def test_invert_falls_back_to_finite_prefix() -> None:
    words = invert_t(HALF, 0.1, depth=3)
    assert len(words) == 1
    assert words[0].finite
    assert len(words[0].prefix) <= 3


def test_bad_inputs_are_rejected() -> None:
    with pytest.raises(AlphabetError):
        t_value_of_word((0.2, 0.3, 0.5), Word.periodic(1))
    with pytest.raises(AlphabetError):
        t_value_of_word(HALF, Word.periodic(3))
    with pytest.raises(WeightError):
        t_value_of_word((0.0, 1.0), Word.periodic(1))
    with pytest.raises(ValueError):
        invert_t(HALF, 0.0)


digits = st.lists(st.integers(1, 2), max_size=6)


@given(
    p1=st.floats(0.2, 0.8),
    prefix=digits,
    cycle=st.lists(st.integers(1, 2), min_size=1, max_size=5),
)
def test_inversion_recovers_the_value(p1: float, prefix: list[int], cycle: list[int]) -> None:
    p = (p1, 1.0 - p1)
    t = t_value_of_word(p, Word(tuple(prefix), tuple(cycle)))
    assume(1e-6 < t < 1.0 - 1e-6)
    for w in invert_t(p, t):
        assert t_value_of_word(p, w) == pytest.approx(t, abs=1e-7)


@given(p1=st.floats(0.2, 0.8), a=digits, b=digits)
def test_t_value_is_monotone_in_lexicographic_order(p1: float, a: list[int], b: list[int]) -> None:
    p = (p1, 1.0 - p1)
    wa, wb = Word(tuple(a), (1,)), Word(tuple(b), (1,))
    if tuple(a) + (1,) * 6 <= tuple(b) + (1,) * 6:
        assert t_value_of_word(p, wa) <= t_value_of_word(p, wb) + 1e-12
