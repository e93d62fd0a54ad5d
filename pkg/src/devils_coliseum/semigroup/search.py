"""Breadth-first searches over the word tree of a generator system."""

import logging
from dataclasses import dataclass, field

import numpy as np

from devils_coliseum.poly.arithmetic import evaluate_array
from devils_coliseum.poly.dynamics import critical_values
from devils_coliseum.poly.types import OrbitVerdict, VerdictKind
from devils_coliseum.semigroup.types import (
    BoundednessVerdict,
    GeneratorSystem,
    PostcriticalSample,
)

logger = logging.getLogger(__name__)

DEFAULT_KHAT_DEPTH = 24
DEFAULT_NODE_BUDGET = 1_000_000


@dataclass
class WordTree:
    """
    One level of a word-tree search.

    Each level keeps, for every live node, its point and the index of its parent in
    the previous level, so a witness word can be read back from any node.
    """

    sys: GeneratorSystem
    points: np.ndarray
    parents: list[np.ndarray] = field(default_factory=list)
    digits: list[np.ndarray] = field(default_factory=list)
    roots: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.intp))
    nodes: int = 0

    @classmethod
    def start(cls, sys: GeneratorSystem, points: np.ndarray) -> "WordTree":
        points = np.atleast_1d(np.asarray(points, dtype=np.complex128))
        return cls(sys, points, roots=np.arange(points.size), nodes=points.size)

    @property
    def depth(self) -> int:
        return len(self.digits)

    def escaped(self) -> np.ndarray:
        with np.errstate(invalid="ignore"):
            return ~np.isfinite(self.points) | (np.abs(self.points) > self.sys.escape_radius)

    def trapped(self) -> np.ndarray:
        region = self.sys.trap_region
        if region is None:
            return np.zeros(self.points.shape, dtype=bool)
        return region.contains(self.points)

    def keep(self, selector: np.ndarray) -> None:
        """Drop nodes not selected; the ancestry of the survivors is preserved."""
        self.points = self.points[selector]
        self.roots = self.roots[selector]
        if self.depth:
            self.parents[-1] = self.parents[-1][selector]
            self.digits[-1] = self.digits[-1][selector]

    def expand(self) -> None:
        m = self.sys.m
        count = self.points.size
        children = np.empty(count * m, dtype=np.complex128)
        for j, g in enumerate(self.sys.generators):
            children[j::m] = evaluate_array(g, self.points)
        self.parents.append(np.repeat(np.arange(count), m))
        self.digits.append(np.tile(np.arange(m), count))
        self.roots = np.repeat(self.roots, m)
        self.points = children
        self.nodes += children.size

    def word_of(self, index: int) -> str:
        """Digits (1-based) of the word leading to node `index` of the current level."""
        letters: list[int] = []
        for level in range(self.depth - 1, -1, -1):
            letters.append(int(self.digits[level][index]) + 1)
            index = int(self.parents[level][index])
        return "".join(str(d) for d in reversed(letters))


def khat_membership(
    sys: GeneratorSystem,
    z: complex,
    depth: int = DEFAULT_KHAT_DEPTH,
    n_budget: int = DEFAULT_NODE_BUDGET,
) -> OrbitVerdict:
    """
    Decide membership of z in the smallest filled-in Julia set K̂(G), up to depth.

    Escaped (z ∉ K̂(G)) as soon as some word drives the orbit past the escape radius;
    Trapped (z ∈ K̂(G)) when every branch has entered the certified trap; otherwise
    Undecided, flagged when the node budget ran out first.
    """
    tree = WordTree.start(sys, np.asarray([z]))
    while True:
        escaped = tree.escaped()
        if escaped.any():
            index = int(np.flatnonzero(escaped)[0])
            return OrbitVerdict(VerdictKind.ESCAPED, tree.depth, witness_word=tree.word_of(index))

        tree.keep(~tree.trapped())
        if tree.points.size == 0:
            return OrbitVerdict(VerdictKind.TRAPPED, tree.depth)
        if tree.depth >= depth:
            return OrbitVerdict(VerdictKind.UNDECIDED, tree.depth)
        if tree.nodes + tree.points.size * sys.m > n_budget:
            logger.debug("K-hat search for %s exhausted budget at depth %d", z, tree.depth)
            return OrbitVerdict(VerdictKind.UNDECIDED, tree.depth, budget_exceeded=True)
        tree.expand()


def _round_keys(points: np.ndarray) -> list[tuple[float, float]]:
    return list(zip(np.round(points.real, 12).tolist(), np.round(points.imag, 12).tolist(), strict=True))


def postcritical_sample(
    sys: GeneratorSystem,
    depth: int = DEFAULT_KHAT_DEPTH,
    budget: int = DEFAULT_NODE_BUDGET,
) -> PostcriticalSample:
    """
    Follow every finite critical value of every generator under all words up to depth.

    Unbounded when a sample passes the escape radius; bounded when every branch ends
    in the certified trap or revisits an already-seen point; undecided otherwise.
    """
    values = np.concatenate([critical_values(g) for g in sys.generators])
    tree = WordTree.start(sys, values)
    visited: set[tuple[float, float]] = set()
    collected: list[np.ndarray] = []

    while True:
        collected.append(tree.points.copy())
        if tree.escaped().any():
            verdict = BoundednessVerdict.UNBOUNDED
            break

        fresh = np.array([key not in visited for key in _round_keys(tree.points)], dtype=bool)
        visited.update(_round_keys(tree.points))
        tree.keep(fresh & ~tree.trapped())

        if tree.points.size == 0:
            verdict = BoundednessVerdict.BOUNDED
            break
        if tree.depth >= depth or tree.nodes + tree.points.size * sys.m > budget:
            verdict = BoundednessVerdict.UNDECIDED
            break
        tree.expand()

    points = np.concatenate(collected) if collected else np.zeros(0, dtype=np.complex128)
    logger.debug("Postcritical sample: %d points, verdict=%s", points.size, verdict)
    return PostcriticalSample(points, verdict, tree.depth)
