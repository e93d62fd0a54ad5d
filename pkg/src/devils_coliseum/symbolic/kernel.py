"""Probe for emptiness of the kernel Julia set ⋂_g g⁻¹(J(G))."""

import logging
from dataclasses import dataclass, field

import numpy as np

from devils_coliseum.semigroup.search import DEFAULT_NODE_BUDGET, WordTree
from devils_coliseum.semigroup.types import GeneratorSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FatouWitness:
    """A word moving point `index` into the basin of ∞ or into the trap."""

    index: int
    word: str
    kind: str

    def to_dict(self) -> dict:
        return {"index": self.index, "word": self.word, "kind": self.kind}


@dataclass(frozen=True, slots=True)
class KernelProbeReport:
    points: int
    depth: int
    witnesses: tuple[FatouWitness, ...] = field(default_factory=tuple)
    budget_exceeded: bool = False

    @property
    def fraction(self) -> float:
        return len(self.witnesses) / self.points if self.points else 0.0

    def to_dict(self, max_witnesses: int = 20) -> dict:
        return {
            "points": self.points,
            "depth": self.depth,
            "fraction": self.fraction,
            "budget_exceeded": self.budget_exceeded,
            "witnesses": [w.to_dict() for w in self.witnesses[:max_witnesses]],
        }


def kernel_julia_probe(
    sys: GeneratorSystem,
    julia_points: np.ndarray,
    depth: int,
    n_budget: int = DEFAULT_NODE_BUDGET,
) -> KernelProbeReport:
    """
    Fraction of points some word of length ≤ depth sends into the Fatou set.

    A witness is an image beyond the escape radius or inside the certified trap.
    All points share one breadth-first search; a point's branches are dropped as
    soon as it has a witness.
    """
    points = np.atleast_1d(np.asarray(julia_points, dtype=np.complex128))
    tree = WordTree.start(sys, points)
    found = np.zeros(points.size, dtype=bool)
    witnesses: list[FatouWitness] = []
    exceeded = False

    while True:
        escaped = tree.escaped()
        trapped = tree.trapped() & ~escaped
        for index in np.flatnonzero(escaped | trapped):
            root = int(tree.roots[index])
            if not found[root]:
                found[root] = True
                kind = "escape" if escaped[index] else "trap"
                witnesses.append(FatouWitness(root, tree.word_of(int(index)), kind))

        tree.keep(~(escaped | trapped) & ~found[tree.roots])
        if tree.points.size == 0 or tree.depth >= depth:
            break
        if tree.nodes + tree.points.size * sys.m > n_budget:
            exceeded = True
            logger.warning("Kernel probe exhausted its node budget at depth %d", tree.depth)
            break
        tree.expand()

    witnesses.sort(key=lambda w: w.index)
    logger.info("Kernel probe: %d of %d points have Fatou witnesses", len(witnesses), points.size)
    return KernelProbeReport(int(points.size), depth, tuple(witnesses), exceeded)
