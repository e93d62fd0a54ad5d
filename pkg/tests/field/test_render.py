"""Tests for Monte Carlo rendering of escape probabilities."""

import numpy as np
import pytest

from devils_coliseum.field import render
from devils_coliseum.field.execution import EXECUTOR_ENV
from devils_coliseum.field.orbits import OrbitTask, classify_orbits
from devils_coliseum.field.render import estimate_T_points, render_T, render_T_target
from devils_coliseum.field.types import GridSpec
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.system import build_system, coliseum_system
from devils_coliseum.semigroup.types import Disk


def test_trap_pixel_is_zero_and_far_corner_is_one() -> None:
    sys = coliseum_system()
    grid = GridSpec.square(4.6, 17)
    T = render_T(sys, grid, N=40, n_max=50, seed=1, workers=1)

    assert abs(grid.point_at(8, 8)) < 1e-12
    assert T.values[8, 8] == 0.0
    assert T.values[0, 0] == 1.0
    assert T.values[16, 16] == 1.0
    assert T.meta["N"] == 40
    assert T.meta["seed"] == 1
    assert T.meta["system_hash"] == sys.system_hash()


def test_values_and_undecided_are_probabilities() -> None:
    T = render_T(coliseum_system(), GridSpec.square(4.6, 12), N=30, n_max=40, seed=3, workers=1)
    assert np.all((T.values >= 0.0) & (T.values <= 1.0))
    assert np.all(T.values + T.undecided <= 1.0 + 1e-12)
    assert np.all(np.isin(np.rint(T.values * 30), np.arange(31)))


def test_render_is_identical_across_workers_and_chunking(monkeypatch) -> None:
    sys = coliseum_system()
    grid = GridSpec.square(2.0, 12)
    reference = render_T(sys, grid, N=20, n_max=60, seed=9, workers=1)

    monkeypatch.setenv(EXECUTOR_ENV, "threads")
    monkeypatch.setattr(render, "CHUNK_ENTRIES", 12 * 20)
    for workers in (2, 4):
        again = render_T(sys, grid, N=20, n_max=60, seed=9, workers=workers)
        np.testing.assert_array_equal(again.values, reference.values)
        np.testing.assert_array_equal(again.undecided, reference.undecided)


def test_different_seed_changes_the_estimate() -> None:
    sys = coliseum_system()
    grid = GridSpec.square(2.0, 16)
    a = render_T(sys, grid, N=20, n_max=60, seed=1, workers=1)
    b = render_T(sys, grid, N=20, n_max=60, seed=2, workers=1)
    assert not np.array_equal(a.values, b.values)


def test_target_probability_complements_escape_on_shared_streams() -> None:
    sys = coliseum_system()
    grid = GridSpec.square(2.0, 10)
    T = render_T(sys, grid, N=25, n_max=80, seed=5, workers=1)
    target = render_T_target(sys, grid, Disk(0j, 0.4), N=25, n_max=80, seed=5, workers=1)
    np.testing.assert_allclose(T.values + target.values + target.undecided, 1.0, atol=1e-12)
    assert target.meta["target"]["radius"] == 0.4


def test_classify_orbits_resolves_step_zero() -> None:
    sys = coliseum_system()
    task = OrbitTask(sys, np.array([200.0 + 0j, 0.1 + 0j]), 0, N=5, n_max=3, seed=0)
    counts = classify_orbits(task)
    assert counts.escaped.tolist() == [5, 0]
    assert counts.trapped.tolist() == [0, 5]
    assert counts.undecided.tolist() == [0, 0]


def test_without_trap_bounded_orbits_stay_undecided() -> None:
    sys = build_system([Polynomial((0, 0, 1)), Polynomial((0, 0, 2))], (0.5, 0.5))
    counts = estimate_T_points(sys, np.array([0.01 + 0j, 10.0 + 0j]), N=8, n_max=5, seed=0)
    assert counts.escaped.tolist() == [0, 8]
    assert counts.undecided.tolist() == [8, 0]


def test_estimate_points_matches_escape_extremes() -> None:
    counts = estimate_T_points(coliseum_system(), np.array([5.0 + 5.0j, -1.0 + 0.05j]), N=30, n_max=50, seed=2)
    assert counts.escaped[0] == 30
    assert counts.escaped[1] == 0
    assert (counts.escaped + counts.trapped + counts.target + counts.undecided == 30).all()


@pytest.mark.parametrize(("N", "n_max"), [(0, 10), (10, 0)])
def test_invalid_sampling_parameters_rejected(N: int, n_max: int) -> None:
    with pytest.raises(ValueError):
        render_T(coliseum_system(), GridSpec.square(1.0, 4), N=N, n_max=n_max, seed=0)


def test_escape_estimate_grows_with_n_max() -> None:
    sys = coliseum_system()
    grid = GridSpec.square(2.0, 12)
    fields = [render_T(sys, grid, N=20, n_max=n_max, seed=4, workers=1) for n_max in (3, 12, 60)]
    for short, long in zip(fields, fields[1:]):
        assert np.all(short.values <= long.values)
        assert np.all(short.undecided >= long.undecided)


def test_small_target_around_the_common_fixed_point() -> None:
    grid = GridSpec.square(0.5, 11)
    assert abs(grid.point_at(5, 5)) < 1e-12
    target = render_T_target(coliseum_system(), grid, Disk(0j, 0.05), N=20, n_max=40, seed=2, workers=1)
    assert target.values[5, 5] == 1.0
    assert target.undecided[5, 5] == 0.0
