"""Point clouds of Julia components J_γ(w) and λ-typical samples of J(G)."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from devils_coliseum.errors import DegreeError
from devils_coliseum.field.julia import DEFAULT_CHAINS, pull_back, single_map_cloud
from devils_coliseum.field.render import estimate_T_points
from devils_coliseum.poly.arithmetic import compose_word
from devils_coliseum.poly.types import COMPOSITION_DEGREE_CAP
from devils_coliseum.semigroup.types import GeneratorSystem
from devils_coliseum.symbolic.coding import t_value_of_word
from devils_coliseum.symbolic.types import ComponentDescriptor, Word
from devils_coliseum.symbolic.words import check_alphabet

logger = logging.getLogger(__name__)

# Chains whose backward pass fails are redrawn at most this many times.
MAX_RESEEDS = 3


def component_of_word(
    sys: GeneratorSystem,
    w: Word,
    iters: int,
    rng_seed: int,
    degree_cap: int = COMPOSITION_DEGREE_CAP,
    chains: int = DEFAULT_CHAINS,
) -> ComponentDescriptor:
    """
    Sample J_γ(w) for an eventually periodic word w = prefix·cyclē.

    The periodic part is the Julia set of the return map g = h_{c_q}∘…∘h_{c_1},
    sampled by backward iteration; the cloud is then pulled back letter by letter
    through the prefix maps, last letter first.
    """
    check_alphabet(w, sys.m)
    w = w.completed()
    degree = math.prod(sys.generators[d - 1].degree for d in w.prefix + w.cycle)
    if degree > degree_cap:
        raise DegreeError(f"word {w} reaches degree {degree} beyond cap {degree_cap}")

    return_map = compose_word([sys.generators[d - 1] for d in w.cycle], degree_cap)
    cloud = single_map_cloud(return_map, iters, rng_seed, chains)

    rng = np.random.default_rng([rng_seed, 1])
    for d in reversed(w.prefix):
        cloud, ok = pull_back(sys.generators[d - 1], cloud, rng)
        if not ok.all():
            logger.warning("Pullback through h%d dropped %d points", d, int(np.count_nonzero(~ok)))
        cloud = cloud[ok]

    t_value = t_value_of_word(sys.weights, w) if sys.m == 2 else None
    logger.debug("Component %s: %d points, t=%s", w, cloud.size, t_value)
    return ComponentDescriptor(w, t_value, cloud)


def sample_lambda_typical(
    sys: GeneratorSystem,
    n_points: int,
    word_len: int,
    rng_seed: int,
) -> np.ndarray:
    """
    Approximate samples of λ = ∫ μ_γ dτ̃(γ).

    Each sample draws a word γ_1…γ_L from τ and pulls a far-out point back along it
    (γ_L first), choosing uniformly among the roots at every step. Uniform root
    choice stands in for the fiberwise equilibrium measure.
    """
    rng = np.random.default_rng(rng_seed)
    start = 2.0 * sys.escape_radius
    samples: list[np.ndarray] = []
    pending = n_points

    for attempt in range(MAX_RESEEDS + 1):
        if pending <= 0:
            break
        words = sys.choose(rng.random((pending, word_len)))
        z = np.full(pending, start, dtype=np.complex128)
        alive = np.ones(pending, dtype=bool)
        for k in range(word_len - 1, -1, -1):
            for j, g in enumerate(sys.generators):
                selected = alive & (words[:, k] == j)
                if selected.any():
                    z[selected], ok = pull_back(g, z[selected], rng)
                    alive[np.flatnonzero(selected)[~ok]] = False
        samples.append(z[alive])
        pending -= int(np.count_nonzero(alive))
        if pending and attempt < MAX_RESEEDS:
            logger.debug("λ-sampling: redrawing %d failed chains", pending)

    if pending > 0:
        logger.warning("λ-sampling: %d of %d samples failed", pending, n_points)
    return np.concatenate(samples) if samples else np.zeros(0, dtype=np.complex128)


@dataclass(frozen=True, slots=True)
class ConstancyReport:
    """Spread of Monte Carlo T estimates over the points of one component cloud."""

    mean: float
    spread: float
    stderr: float
    points: int

    @property
    def constant(self) -> bool:
        return self.spread <= 8.0 * self.stderr + 1e-12

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "spread": self.spread,
            "stderr": self.stderr,
            "points": self.points,
            "constant": self.constant,
        }


def component_constancy(
    sys: GeneratorSystem,
    cloud: np.ndarray,
    N: int,
    n_max: int,
    seed: int,
    workers: int | None = None,
) -> ConstancyReport:
    """T̂ at every cloud point; for m = 2 it should be constant on the component."""
    counts = estimate_T_points(sys, cloud, N, n_max, seed, workers)
    values = counts.escaped / N
    if values.size == 0:
        return ConstancyReport(math.nan, 0.0, 0.0, 0)
    mean = float(values.mean())
    stderr = math.sqrt(max(mean * (1.0 - mean), 1.0 / N) / N)
    return ConstancyReport(mean, float(values.max() - values.min()), stderr, int(values.size))


@dataclass(frozen=True, slots=True)
class TValueCheck:
    word: str
    closed_form: float
    monte_carlo: float
    stderr: float
    points: int

    @property
    def deviation(self) -> float:
        return abs(self.closed_form - self.monte_carlo)

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "closed_form": self.closed_form,
            "monte_carlo": self.monte_carlo,
            "stderr": self.stderr,
            "points": self.points,
            "deviation": self.deviation,
        }


def t_value_gate(
    sys: GeneratorSystem,
    words: Sequence[Word],
    N: int,
    n_max: int,
    seed: int,
    cloud_points: int = 64,
    workers: int | None = None,
) -> list[TValueCheck]:
    """
    Compare the closed-form t-value of each word with Monte Carlo T̂ on its component.

    The Monte Carlo value is the mean escape fraction over cloud_points points of the
    component; stderr is that of a single N-sample estimate.
    """
    checks = []
    for index, w in enumerate(words):
        component = component_of_word(sys, w, cloud_points, seed + index)
        counts = estimate_T_points(sys, component.cloud, N, n_max, seed, workers)
        total = N * max(component.cloud.size, 1)
        estimate = float(counts.escaped.sum()) / total
        stderr = math.sqrt(max(estimate * (1.0 - estimate), 1.0 / N) / N)
        checks.append(
            TValueCheck(str(w), float(component.t_value or 0.0), estimate, stderr, component.cloud.size)
        )
        logger.info("t-value %s: closed form %.4f, Monte Carlo %.4f", w, checks[-1].closed_form, estimate)
    return checks
