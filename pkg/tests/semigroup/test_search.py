"""Tests for word-tree searches and preimage disjointness."""

import numpy as np

from devils_coliseum.field.masks import annulus_mask, difference, disk_mask, filled_julia_mask
from devils_coliseum.field.types import GridSpec
from devils_coliseum.poly.types import Polynomial, VerdictKind
from devils_coliseum.semigroup.preimage import preimage_disjointness, preimage_mask
from devils_coliseum.semigroup.search import khat_membership, postcritical_sample
from devils_coliseum.semigroup.system import COLISEUM_H2, build_system, coliseum_system, permute_system
from devils_coliseum.semigroup.types import BoundednessVerdict, Disjointness


def test_khat_membership_verdicts() -> None:
    sys = coliseum_system()
    assert khat_membership(sys, 0j).kind is VerdictKind.TRAPPED
    assert khat_membership(sys, 200.0).kind is VerdictKind.ESCAPED

    verdict = khat_membership(sys, 5.0)
    assert verdict.kind is VerdictKind.ESCAPED
    assert verdict.steps == 1
    assert verdict.witness_word == "1"


def test_khat_membership_reports_budget() -> None:
    verdict = khat_membership(coliseum_system(), 1.618034, depth=40, n_budget=50)
    assert verdict.kind in (VerdictKind.UNDECIDED, VerdictKind.ESCAPED)
    if verdict.kind is VerdictKind.UNDECIDED:
        assert verdict.budget_exceeded


def test_postcritical_set_of_worked_example_is_bounded() -> None:
    sample = postcritical_sample(coliseum_system())
    assert sample.verdict is BoundednessVerdict.BOUNDED
    assert sample.label.startswith("bounded")


def test_postcritical_sample_ignores_generator_order() -> None:
    sys = coliseum_system()
    forward = postcritical_sample(sys)
    swapped = postcritical_sample(permute_system(sys, [1, 0]))
    assert swapped.verdict is forward.verdict is BoundednessVerdict.BOUNDED
    np.testing.assert_array_equal(np.sort_complex(swapped.points), np.sort_complex(forward.points))


def test_postcritical_set_unbounded_for_escaping_critical_value() -> None:
    sys = build_system([Polynomial((3, 0, 1)), Polynomial((0, 0, 1))], (0.5, 0.5))
    assert postcritical_sample(sys).verdict is BoundednessVerdict.UNBOUNDED


def test_preimage_mask_of_disk_under_square() -> None:
    grid = GridSpec.square(2.0, 101)
    region = disk_mask(grid, 0j, 1.0)
    pre = preimage_mask(Polynomial((0, 0, 1)), region)
    assert pre.contains(0.9)
    assert not pre.contains(1.1)


def test_preimages_of_worked_example_annulus_are_disjoint() -> None:
    sys = coliseum_system()
    grid = GridSpec.square(4.6, 256)
    annulus = difference(filled_julia_mask(COLISEUM_H2, grid), disk_mask(grid, 0j, 0.4))
    annulus = difference(annulus, disk_mask(grid, -1 + 0j, 0.2))
    report = preimage_disjointness(sys, annulus)
    assert report.verdict is Disjointness.DISJOINT
    assert report.eroded_overlap_pixels == 0


def test_overlapping_preimages_are_detected() -> None:
    sys = build_system([Polynomial((0, 0, 1)), Polynomial((0, 0, 1.1))], (0.5, 0.5))
    grid = GridSpec.square(2.0, 128)
    report = preimage_disjointness(sys, annulus_mask(grid, 0.2, 1.0))
    assert report.verdict is Disjointness.OVERLAPPING
