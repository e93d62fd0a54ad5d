"""The affine shadow Ψ(g)(x) = deg(g)·x + log|a(g)| and the attractor M(Ψ(G))."""

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from devils_coliseum.affine.types import AffineMap, IntervalIFS
from devils_coliseum.errors import DegreeError
from devils_coliseum.poly.types import Polynomial
from devils_coliseum.semigroup.types import GeneratorSystem

logger = logging.getLogger(__name__)

MAX_ATTRACTOR_POINTS = 1 << 21
# Images closer than this count as touching.
OVERLAP_TOLERANCE = 1e-12


def psi(g: Polynomial) -> AffineMap:
    if g.degree < 2:
        raise DegreeError(f"Ψ needs degree >= 2, got {g.degree}")
    return AffineMap(float(g.degree), math.log(abs(g.leading)))


def shadow_ifs(sys: GeneratorSystem) -> IntervalIFS:
    """Inverses of Ψ(h_j) acting on the hull spanned by their fixed points."""
    shadows = [psi(g) for g in sys.generators]
    fixed = [f.fixed_point() for f in shadows]
    return IntervalIFS(tuple(f.inverse() for f in shadows), (min(fixed), max(fixed)))


@dataclass(frozen=True, slots=True, eq=False)
class AttractorReport:
    hull: tuple[float, float]
    points: np.ndarray
    cantor: bool
    sum_inv_deg: float
    gaps: tuple[tuple[float, float], ...]
    depth: int

    def to_dict(self) -> dict:
        return {
            "hull": list(self.hull),
            "cantor": self.cantor,
            "sum_inv_deg": self.sum_inv_deg,
            "depth": self.depth,
            "points": int(self.points.size),
            "gaps": [list(g) for g in self.gaps],
        }


def _pairwise_disjoint(intervals: list[tuple[float, float]]) -> bool:
    ordered = sorted(intervals)
    return all(b[0] - a[1] > OVERLAP_TOLERANCE for a, b in itertools.pairwise(ordered))


def _gaps(intervals: list[tuple[float, float]]) -> tuple[tuple[float, float], ...]:
    gaps = []
    reach = -math.inf
    for lo, hi in sorted(intervals):
        if reach != -math.inf and lo - reach > OVERLAP_TOLERANCE:
            gaps.append((reach, lo))
        reach = max(reach, hi)
    return tuple(gaps)


def mpsi_attractor(sys: GeneratorSystem, depth: int) -> AttractorReport:
    """
    Approximate M(Ψ(G)) by the depth-level images of the hull under the inverse maps.

    cantor is True when the first-level images are pairwise disjoint; gaps lists the
    complementary intervals of the depth-level cover inside the hull.
    """
    ifs = shadow_ifs(sys)
    m = len(ifs.maps)
    if m**depth * 2 > MAX_ATTRACTOR_POINTS:
        capped = max(0, int(math.log(MAX_ATTRACTOR_POINTS / 2) / math.log(max(m, 2))))
        logger.warning("Attractor depth %d too large for %d maps; using %d", depth, m, capped)
        depth = capped

    intervals = [ifs.hull]
    for _ in range(depth):
        intervals = [IntervalIFS.image(f, iv) for iv in intervals for f in ifs.maps]

    points = np.unique(np.asarray(intervals, dtype=np.float64).ravel())
    cantor = m == 1 or _pairwise_disjoint(list(ifs.images))
    return AttractorReport(
        ifs.hull,
        points,
        cantor,
        math.fsum(1.0 / g.degree for g in sys.generators),
        _gaps(intervals),
        depth,
    )
