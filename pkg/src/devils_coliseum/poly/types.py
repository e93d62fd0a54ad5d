"""Shared type definitions for polynomial dynamics."""

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

# Orbit points beyond this modulus are replaced by the point at infinity.
SATURATION_MODULUS = 1e150

AT_INFINITY = complex(float("inf"), 0.0)

# Words longer than this are iterated, never expanded into one polynomial.
COMPOSITION_DEGREE_CAP = 4096


@dataclass(frozen=True, slots=True)
class Polynomial:
    """Complex polynomial with coefficients in ascending degree order."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed.pop()
        if not trimmed:
            trimmed = [0j]
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in trimmed))

    @classmethod
    def from_coeffs(cls, coeffs) -> "Polynomial":
        return cls(tuple(complex(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        """Leading coefficient a(g)."""
        return self.coeffs[-1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.complex128)

    def __str__(self) -> str:
        from devils_coliseum.poly.text import format_polynomial

        return format_polynomial(self)


class VerdictKind(StrEnum):
    ESCAPED = "Escaped"
    TRAPPED = "Trapped"
    UNDECIDED = "Undecided"


@dataclass(frozen=True, slots=True)
class OrbitVerdict:
    """Outcome of following one orbit, or a tree of orbits, for a bounded number of steps."""

    kind: VerdictKind
    steps: int
    witness_word: str | None = None
    budget_exceeded: bool = False

    @property
    def escaped(self) -> bool:
        return self.kind is VerdictKind.ESCAPED

    @property
    def trapped(self) -> bool:
        return self.kind is VerdictKind.TRAPPED

    def to_dict(self) -> dict:
        payload: dict = {"kind": str(self.kind), "steps": self.steps, "witness_word": self.witness_word}
        if self.budget_exceeded:
            payload["budget_exceeded"] = True
        return payload
