"""Tests for the kernel Julia set probe."""

import numpy as np

from devils_coliseum.field.julia import julia_backward_cloud
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.system import build_system, coliseum_system
from devils_coliseum.symbolic.kernel import kernel_julia_probe


def test_every_julia_point_of_the_worked_example_has_a_fatou_witness() -> None:
    sys = coliseum_system()
    cloud = julia_backward_cloud(sys, None, 300, rng_seed=4)
    report = kernel_julia_probe(sys, cloud, depth=8)
    assert report.points == 300
    assert report.fraction == 1.0
    assert not report.budget_exceeded
    assert {w.kind for w in report.witnesses} <= {"escape", "trap"}


def test_witness_kinds_for_obvious_points() -> None:
    report = kernel_julia_probe(coliseum_system(), np.array([500.0 + 0j, 0.1 + 0j]), depth=2)
    kinds = {w.index: w.kind for w in report.witnesses}
    assert kinds == {0: "escape", 1: "trap"}
    assert report.to_dict()["fraction"] == 1.0


def test_fixed_point_of_a_single_map_has_no_witness() -> None:
    sys = build_system([Polynomial((0, 0, 1))], (1.0,))
    report = kernel_julia_probe(sys, np.array([1.0 + 0j]), depth=5)
    assert report.fraction == 0.0
    assert report.witnesses == ()
