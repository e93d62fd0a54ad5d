"""Tests for word syntax, canonical form and the lexicographic order."""

import numpy as np
import pytest

from devils_coliseum.errors import AlphabetError
from devils_coliseum.symbolic.types import Word
from devils_coliseum.symbolic.words import (
    check_alphabet,
    compare_lex,
    is_gap_pair,
    parse_word,
    random_word,
    shift,
)


def test_parse_prefix_and_cycle() -> None:
    assert parse_word("21(1)") == Word((2,), (1,))
    assert parse_word("(12)") == Word.periodic(1, 2)
    assert parse_word(" 12 ") == Word((1, 2))
    assert parse_word("12").finite
    assert str(parse_word("21(1)")) == "2(1)"


@pytest.mark.parametrize("text", ["", "ab", "1(2", "()", "1(0)"])
def test_parse_rejects_malformed(text: str) -> None:
    with pytest.raises(ValueError):
        parse_word(text)


def test_equal_sequences_have_one_representation() -> None:
    assert Word((1,), (1,)) == Word.periodic(1)
    assert Word.periodic(1, 1) == Word.periodic(1)
    assert Word((2, 1, 2), (1, 2)) == Word.periodic(2, 1)
    assert str(Word((1, 2), (1, 2))) == "(12)"


def test_digits_must_be_positive() -> None:
    with pytest.raises(ValueError):
        Word((0, 1))


def test_letters_of_infinite_and_finite_words() -> None:
    w = Word((2,), (1, 2))
    assert w.letters(5) == (2, 1, 2, 1, 2)
    assert Word((1, 2)).letters(5) == (1, 2)
    with pytest.raises(IndexError):
        Word((1,)).letter(3)


def test_shift_drops_first_letter() -> None:
    assert shift(Word((2,), (1,))) == Word.periodic(1)
    assert shift(Word.periodic(1, 2)) == Word.periodic(2, 1)
    with pytest.raises(ValueError):
        shift(Word())


def test_lexicographic_order_completes_finite_words_with_ones() -> None:
    assert compare_lex(Word((1,)), Word.periodic(1)) == 0
    assert compare_lex(Word((1,), (2,)), Word((2,), (1,))) == -1
    assert compare_lex(Word.periodic(2), Word.periodic(2, 1)) == 1
    assert compare_lex(Word.periodic(1, 2), Word.periodic(1, 2, 1, 2)) == 0


def test_gap_pairs() -> None:
    assert is_gap_pair(Word((1,), (2,)), Word((2,), (1,)))
    assert is_gap_pair(Word((2, 2), (1,)), Word((2, 1), (2,)))
    assert not is_gap_pair(Word((1,), (2,)), Word.periodic(2))
    assert not is_gap_pair(Word((1, 1), (2,)), Word((2, 2), (1,)))


def test_alphabet_check() -> None:
    check_alphabet(Word((1, 2), (2,)), 2)
    with pytest.raises(AlphabetError):
        check_alphabet(Word((3,)), 2)


def test_random_words_respect_alphabet() -> None:
    rng = np.random.default_rng(0)
    for _ in range(50):
        w = random_word(rng, m=3)
        assert not w.finite
        assert w.alphabet_size <= 3
