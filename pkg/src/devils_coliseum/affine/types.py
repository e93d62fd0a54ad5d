"""Real affine maps and interval iterated function systems."""

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class AffineMap:
    """x ↦ a·x + b with a ≠ 0."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if self.a == 0:
            raise ValueError("affine map slope must be non-zero")

    def __call__(self, x):
        return self.a * x + self.b

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self ∘ inner."""
        return AffineMap(self.a * inner.a, self.a * inner.b + self.b)

    def inverse(self) -> "AffineMap":
        return AffineMap(1.0 / self.a, -self.b / self.a)

    def fixed_point(self) -> float:
        if self.a == 1:
            raise ValueError("translation has no fixed point")
        return -self.b / (self.a - 1.0)

    def __str__(self) -> str:
        return f"{self.a:.17g}x{self.b:+.17g}"


@dataclass(frozen=True, slots=True)
class IntervalIFS:
    """Contractions of a closed interval into itself."""

    maps: tuple[AffineMap, ...]
    hull: tuple[float, float]
    images: tuple[tuple[float, float], ...] = field(init=False)

    def __post_init__(self) -> None:
        lo, hi = self.hull
        if lo > hi:
            raise ValueError(f"empty hull {self.hull}")
        for f in self.maps:
            if abs(f.a) >= 1:
                raise ValueError(f"{f} is not a contraction")
        object.__setattr__(self, "images", tuple(self.image(f, (lo, hi)) for f in self.maps))

    @staticmethod
    def image(f: AffineMap, interval: tuple[float, float]) -> tuple[float, float]:
        x, y = f(interval[0]), f(interval[1])
        return (min(x, y), max(x, y))
