"""Shared type definitions for generator systems and their certificates."""

import hashlib
from dataclasses import dataclass, field, replace
from enum import StrEnum

import numpy as np

from devils_coliseum.field.types import RegionMask
from devils_coliseum.poly.text import format_polynomial
from devils_coliseum.poly.types import Polynomial


@dataclass(frozen=True, slots=True)
class Disk:
    center: complex
    radius: float

    def contains(self, z: np.ndarray) -> np.ndarray:
        with np.errstate(invalid="ignore"):
            return np.abs(np.asarray(z) - self.center) < self.radius

    def clearance(self, z: np.ndarray) -> np.ndarray:
        """Signed distance to the boundary, positive inside."""
        with np.errstate(invalid="ignore"):
            return self.radius - np.abs(np.asarray(z) - self.center)

    def boundary(self, samples: int) -> np.ndarray:
        angles = 2.0 * np.pi * np.arange(samples) / samples
        return self.center + self.radius * np.exp(1j * angles)


@dataclass(frozen=True, slots=True)
class TrapRegion:
    """Union of disks and/or a raster mask."""

    disks: tuple[Disk, ...] = ()
    mask: RegionMask | None = None

    def contains(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=np.complex128)
        hit = np.zeros(z.shape, dtype=bool)
        for disk in self.disks:
            hit |= disk.contains(z)
        if self.mask is not None:
            hit |= self.mask.contains(z)
        return hit

    def to_dict(self) -> dict:
        payload: dict = {
            "disks": [
                {"center": [d.center.real, d.center.imag], "radius": d.radius} for d in self.disks
            ]
        }
        if self.mask is not None:
            payload["mask_pixels"] = self.mask.count
        return payload


@dataclass(frozen=True, slots=True)
class TrapCertificate:
    """Evidence that every generator maps the region into itself with clearance ≥ margin."""

    region: TrapRegion
    margin: float
    samples: int
    min_clearance: float


@dataclass(frozen=True, slots=True)
class TrapFailure:
    """Worst violating boundary sample of a failed certification."""

    point: complex
    generator_index: int
    image: complex
    clearance: float

    def to_dict(self) -> dict:
        return {
            "point": [self.point.real, self.point.imag],
            "generator": self.generator_index + 1,
            "image": [self.image.real, self.image.imag],
            "clearance": self.clearance,
        }


@dataclass(frozen=True, slots=True)
class GeneratorSystem:
    """Generators h_1..h_m with weights p_j defining τ = Σ p_j δ_{h_j}."""

    generators: tuple[Polynomial, ...]
    weights: tuple[float, ...]
    escape_radius: float
    trap: TrapCertificate | None = None
    name: str = ""
    cdf: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cdf", np.cumsum(np.asarray(self.weights, dtype=np.float64)))

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def trap_region(self) -> TrapRegion | None:
        return None if self.trap is None else self.trap.region

    def with_trap(self, certificate: TrapCertificate | None) -> "GeneratorSystem":
        return replace(self, trap=certificate)

    def choose(self, u: np.ndarray) -> np.ndarray:
        """Generator index for uniforms u ∈ [0, 1) by inverse CDF over the weights."""
        index = np.searchsorted(self.cdf, u, side="right")
        return np.minimum(index, self.m - 1)

    def system_hash(self) -> str:
        text = ";".join(format_polynomial(g) for g in self.generators)
        text += "|" + ",".join(f"{p:.17g}" for p in self.weights)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]

    def to_dict(self) -> dict:
        payload: dict = {
            "polys": [format_polynomial(g) for g in self.generators],
            "weights": list(self.weights),
            "escape_radius": self.escape_radius,
            "hash": self.system_hash(),
        }
        if self.trap is not None:
            payload["trap"] = self.trap.region.to_dict()
        return payload


class BoundednessVerdict(StrEnum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"
    UNDECIDED = "undecided"


@dataclass(frozen=True, slots=True)
class PostcriticalSample:
    points: np.ndarray
    verdict: BoundednessVerdict
    depth: int

    @property
    def label(self) -> str:
        if self.verdict is BoundednessVerdict.BOUNDED:
            return f"bounded (depth-{self.depth} evidence)"
        return str(self.verdict)


class Disjointness(StrEnum):
    DISJOINT = "disjoint"
    OVERLAPPING = "overlapping"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, slots=True)
class DisjointnessReport:
    verdict: Disjointness
    preimage_pixels: tuple[int, ...]
    eroded_overlap_pixels: int
    dilated_overlap_pixels: int
    outside_region_pixels: int
    region_pixels: int

    def to_dict(self) -> dict:
        return {
            "verdict": str(self.verdict),
            "preimage_pixels": list(self.preimage_pixels),
            "eroded_overlap_pixels": self.eroded_overlap_pixels,
            "dilated_overlap_pixels": self.dilated_overlap_pixels,
            "outside_region_pixels": self.outside_region_pixels,
            "region_pixels": self.region_pixels,
        }
