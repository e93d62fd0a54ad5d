"""Tests for generator-system construction and the worked-example preset."""

import numpy as np
import pytest

from devils_coliseum.errors import DegreeError, DuplicateGenerator, WeightError
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.system import (
    COLISEUM_H1,
    COLISEUM_H2,
    build_system,
    coliseum_system,
    permute_system,
    validate_weights,
)

SQUARE = Polynomial((0, 0, 1))


def test_coliseum_preset() -> None:
    sys = coliseum_system()
    assert sys.generators == (COLISEUM_H1, COLISEUM_H2)
    assert sys.weights == (0.5, 0.5)
    assert sys.degrees == (4, 4)
    assert sys.escape_radius == 128.0
    assert sys.trap is not None
    assert sys.trap.min_clearance >= sys.trap.margin


@pytest.mark.parametrize(
    "weights",
    [(0.5, 0.4), (1.0, 0.0), (0.5, 0.5, 0.0), (1.2, -0.2), ()],
)
def test_invalid_weights_are_rejected(weights: tuple[float, ...]) -> None:
    with pytest.raises(WeightError):
        validate_weights(weights, 2)


def test_single_generator_takes_unit_weight() -> None:
    assert validate_weights((1.0,), 1) == (1.0,)
    assert build_system([SQUARE], (1.0,)).escape_radius == 2.0


def test_degree_below_two_is_rejected() -> None:
    with pytest.raises(DegreeError):
        build_system([SQUARE, Polynomial((1, 2))], (0.5, 0.5))


def test_duplicate_generators_are_rejected() -> None:
    with pytest.raises(DuplicateGenerator):
        build_system([SQUARE, Polynomial((0, 0, 1))], (0.5, 0.5))


def test_choose_follows_weights() -> None:
    sys = build_system([COLISEUM_H1, COLISEUM_H2], (0.25, 0.75))
    u = np.array([0.0, 0.2, 0.25, 0.9, 0.999999])
    np.testing.assert_array_equal(sys.choose(u), [0, 0, 1, 1, 1])


def test_permute_keeps_trap_and_moves_weights() -> None:
    sys = coliseum_system((0.3, 0.7))
    swapped = permute_system(sys, [1, 0])
    assert swapped.generators == (COLISEUM_H2, COLISEUM_H1)
    assert swapped.weights == (0.7, 0.3)
    assert swapped.trap == sys.trap
    with pytest.raises(ValueError):
        permute_system(sys, [0, 0])


def test_system_hash_depends_on_weights() -> None:
    assert coliseum_system().system_hash() == coliseum_system().system_hash()
    assert coliseum_system().system_hash() != coliseum_system((0.3, 0.7)).system_hash()
