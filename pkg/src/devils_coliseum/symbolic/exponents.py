"""Closed-form Hölder exponent bound u(h, p, μ) and the Hausdorff dimension lower bound."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from devils_coliseum.errors import DegreeError
from devils_coliseum.semigroup.system import validate_weights

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class UExponent:
    value: float
    sum_inv_deg: float

    @property
    def warning(self) -> bool:
        """The bound u < 1 needs Σ 1/deg_j < 1."""
        return self.sum_inv_deg >= 1.0

    def __float__(self) -> float:
        return self.value

    def to_dict(self) -> dict:
        return {"value": self.value, "sum_inv_deg": self.sum_inv_deg, "warning": self.warning}


def sum_inv_deg(degs: Sequence[int]) -> float:
    return math.fsum(1.0 / d for d in degs)


def _sums(degs: Sequence[int], p: Sequence[float]) -> tuple[float, float]:
    """(-Σ p_j log p_j, Σ p_j log deg_j)."""
    weights = validate_weights(p, len(degs))
    for index, d in enumerate(degs, start=1):
        if d < 2:
            raise DegreeError(f"degree of h{index} is {d} < 2")
    entropy = -math.fsum(q * math.log(q) for q in weights if q > 0)
    growth = math.fsum(q * math.log(d) for q, d in zip(weights, degs, strict=True))
    return entropy, growth


def u_exponent(degs: Sequence[int], p: Sequence[float]) -> UExponent:
    """u = (-Σ p_j log p_j) / (Σ p_j log deg_j)."""
    entropy, growth = _sums(degs, p)
    result = UExponent(entropy / growth, sum_inv_deg(degs))
    if result.warning:
        logger.warning(
            "Σ 1/deg = %.6g ≥ 1: u = %.6g is not guaranteed to bound Hölder exponents",
            result.sum_inv_deg,
            result.value,
        )
    return result


def dim_lower_bound(degs: Sequence[int], p: Sequence[float]) -> float:
    """Lower bound 1 + u on the Hausdorff dimension of the Julia-set annulus region."""
    entropy, growth = _sums(degs, p)
    return (growth + entropy) / growth
