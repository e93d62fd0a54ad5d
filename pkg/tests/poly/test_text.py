"""Tests for the polynomial text format."""

import pytest

from devils_coliseum.poly.text import format_polynomial, parse_coefficient, parse_polynomial
from devils_coliseum.poly.types import Polynomial


def test_parse_polynomial_ascending_coefficients() -> None:
    assert parse_polynomial("0,0,-2,0,1") == Polynomial((0, 0, -2, 0, 1))


@pytest.mark.parametrize(
    ("token", "expected"),
    [("1.5", 1.5), ("-2", -2), ("1+2i", 1 + 2j), ("0.5-0.25i", 0.5 - 0.25j), ("3i", 3j), ("1e-3", 1e-3)],
)
def test_parse_coefficient(token: str, expected: complex) -> None:
    assert parse_coefficient(token) == expected


@pytest.mark.parametrize("text", ["", "1,abc", "i2", "1,2,x3"])
def test_parse_polynomial_rejects_malformed_text(text: str) -> None:
    with pytest.raises(ValueError):
        parse_polynomial(text)


def test_format_is_exact() -> None:
    g = Polynomial((0.1, 0, -1 / 3 + 0.2j, 0, 1 / 64))
    assert parse_polynomial(format_polynomial(g)) == g


@pytest.mark.parametrize("text", ["1,,2", "1,2,", ",1,2", "  "])
def test_empty_coefficients_are_rejected(text: str) -> None:
    with pytest.raises(ValueError, match="coefficient"):
        parse_polynomial(text)
