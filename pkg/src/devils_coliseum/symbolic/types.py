"""Shared type definitions for words, components and exponent estimates."""

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from devils_coliseum.field.types import RegionMask


def _minimal_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Shortest block whose repetition gives cycle."""
    q = len(cycle)
    for period in range(1, q + 1):
        if q % period == 0 and cycle[:period] * (q // period) == cycle:
            return cycle[:period]
    return cycle


@dataclass(frozen=True, slots=True)
class Word:
    """
    Eventually periodic word prefix·cycle·cycle·…; an empty cycle marks a finite word.

    Digits are 1-based generator indices. Infinite words are stored canonically:
    minimal cycle and shortest prefix, so equal sequences compare equal.
    """

    prefix: tuple[int, ...] = ()
    cycle: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prefix = tuple(int(d) for d in self.prefix)
        cycle = tuple(int(d) for d in self.cycle)
        if any(d < 1 for d in prefix + cycle):
            raise ValueError(f"word digits must be positive, got {prefix}({cycle})")
        if cycle:
            cycle = _minimal_cycle(cycle)
            while prefix and prefix[-1] == cycle[-1]:
                prefix = prefix[:-1]
                cycle = (cycle[-1],) + cycle[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    @classmethod
    def periodic(cls, *cycle: int) -> "Word":
        return cls((), cycle)

    @property
    def finite(self) -> bool:
        return not self.cycle

    def completed(self) -> "Word":
        """Finite words stand for the left end of their cylinder: followed by 1̄."""
        return Word(self.prefix, (1,)) if self.finite else self

    def letter(self, n: int) -> int:
        """The n-th digit, 0-based."""
        if n < len(self.prefix):
            return self.prefix[n]
        if self.finite:
            raise IndexError(f"finite word has {len(self.prefix)} letters")
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def letters(self, n: int) -> tuple[int, ...]:
        """The first n digits (fewer for a short finite word)."""
        if self.finite:
            return self.prefix[:n]
        return tuple(self.letter(k) for k in range(n))

    @property
    def alphabet_size(self) -> int:
        return max(self.prefix + self.cycle, default=0)

    def __str__(self) -> str:
        text = "".join(map(str, self.prefix))
        if self.cycle:
            text += "(" + "".join(map(str, self.cycle)) + ")"
        return text


@dataclass(frozen=True, slots=True, eq=False)
class ComponentDescriptor:
    """A connected component J_γ(w) of J(G), sampled by a point cloud."""

    word: Word
    t_value: float | None
    cloud: np.ndarray
    mask: RegionMask | None = None

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "t_value": self.t_value,
            "cloud_points": int(self.cloud.size),
        }


@dataclass(frozen=True, slots=True)
class HolderEstimate:
    exponent: float
    fit_quality: float
    radii: tuple[float, ...]
    z0: complex
    reliable: bool = True

    def __post_init__(self) -> None:
        if len(self.radii) < 3:
            raise ValueError("a Hölder fit needs at least 3 radii")
        if any(b >= a for a, b in zip(self.radii, self.radii[1:], strict=False)):
            raise ValueError(f"radii must be strictly decreasing, got {self.radii}")

    def to_dict(self) -> dict:
        return {
            "z0": [self.z0.real, self.z0.imag],
            "exponent": self.exponent,
            "r_squared": self.fit_quality,
            "radii": list(self.radii),
            "reliable": self.reliable,
        }


class SurroundOrder(StrEnum):
    """Outcome of comparing two compact sets in the surrounding order."""

    INSIDE = "a <_s b"
    OUTSIDE = "b <_s a"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class TrichotomyCase(StrEnum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
