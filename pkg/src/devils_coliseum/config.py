"""Run configuration: TOML file, dotted --set overrides, environment and config hash."""

import hashlib
import json
import logging
import os
import tomllib
from collections.abc import Iterable
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

from devils_coliseum.errors import ColiseumError, ConfigError
from devils_coliseum.field.export import read_window_mask
from devils_coliseum.field.types import GridSpec
from devils_coliseum.poly.text import parse_polynomial
from devils_coliseum.semigroup.system import PRESETS, build_system, with_certified_trap
from devils_coliseum.semigroup.types import Disk, GeneratorSystem, TrapRegion

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "COLISEUM_OUTPUT_DIR"

REQUIRED = object()


@dataclass(frozen=True, slots=True)
class SystemConfig:
    preset: str = ""
    polys: tuple[str, ...] = ()
    weights: tuple[float, ...] = ()
    # Trap disks as (re, im, radius).
    trap: tuple[tuple[float, float, float], ...] = ()
    # PGM/PNG trap raster; its pixel size comes from the file, its window from trap_mask_rect.
    trap_mask: str = ""
    trap_mask_rect: tuple[float, float, float, float] = (-4.6, 4.6, -4.6, 4.6)
    name: str = ""


@dataclass(frozen=True, slots=True)
class GridConfig:
    rect: tuple[float, float, float, float] = (-4.6, 4.6, -4.6, 4.6)
    width: int = 256
    height: int = 256

    def to_grid(self) -> GridSpec:
        return GridSpec(*self.rect, self.width, self.height)


@dataclass(frozen=True, slots=True)
class SamplingConfig:
    seed: int = field(default=REQUIRED)  # type: ignore[assignment]
    N: int = 500
    n_max: int = 300


@dataclass(frozen=True, slots=True)
class AnalysisConfig:
    t_values: tuple[float, ...] = (0.25, 0.5, 0.3333333333333333)
    invert_depth: int = 64
    words: tuple[str, ...] = ("(1)", "(2)", "2(1)", "1(2)", "(12)", "12(1)", "21(2)", "(112)", "(122)", "22(1)")
    cloud_points: int = 4000
    julia_window: int = 1
    holder_points: int = 20
    lambda_word_len: int = 40
    kernel_points: int = 200
    kernel_depth: int = 20
    annuli: tuple[tuple[float, float], ...] = ((0.0, 0.3), (1.9, 2.2), (3.3, 3.48), (4.2, 4.5))


@dataclass(frozen=True, slots=True)
class VerifyConfig:
    checks: tuple[str, ...] = ()
    geometry_size: int = 512
    boundary_points: int = 100
    gate_N: int = 4000
    gate_points: int = 64
    operator_steps: int = 60
    limit_tolerance: float = 0.05
    mu_point: tuple[float, float] = (0.0, 0.0)
    staircase_points: int = 100
    mc_points: int = 20


@dataclass(frozen=True, slots=True)
class StaircaseConfig:
    system: str = "cantor"
    a: float = 0.5
    points: int = 1001
    mode: str = "exact"
    depth: int = 48
    samples: int = 10_000
    n_max: int = 200
    attractor_depth: int = 10


@dataclass(frozen=True, slots=True)
class Classify3Config:
    extra: str = "0,0,0,0,0.05"
    weights: tuple[float, ...] = ()
    cloud_points: int = 20_000
    dilate: int = 2
    sizes: tuple[int, ...] = (256,)


@dataclass(frozen=True, slots=True)
class OutputConfig:
    dir: str = "."
    prefix: str = "coliseum"
    png: bool = False
    csv: bool = False

    @property
    def path(self) -> Path:
        return Path(self.dir)

    def artifact(self, suffix: str) -> Path:
        return self.path / f"{self.prefix}_{suffix}"


@dataclass(frozen=True, slots=True)
class RunConfig:
    system: SystemConfig
    sampling: SamplingConfig
    grid: GridConfig = GridConfig()
    analysis: AnalysisConfig = AnalysisConfig()
    verify: VerifyConfig = VerifyConfig()
    staircase: StaircaseConfig = StaircaseConfig()
    classify3: Classify3Config = Classify3Config()
    output: OutputConfig = OutputConfig()

    def config_hash(self) -> str:
        """SHA-256 prefix of the canonical JSON of every section except output."""
        payload = {k: v for k, v in asdict(self).items() if k != "output"}
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]

    def to_dict(self) -> dict:
        return asdict(self)


SECTIONS: dict[str, type] = {f.name: f.type for f in fields(RunConfig)}  # type: ignore[misc]


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _build_section(name: str, cls: type, raw: Any) -> Any:
    if not isinstance(raw, dict):
        raise ConfigError(f"[{name}] must be a table")
    known = {f.name for f in fields(cls)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown key(s) in [{name}]: {', '.join(sorted(unknown))}")
    values = {}
    for f in fields(cls):
        if f.name in raw:
            values[f.name] = _freeze(raw[f.name])
        elif f.default is REQUIRED:
            raise ConfigError(f"missing required key {name}.{f.name}")
    return cls(**values)


def parse_override(text: str) -> tuple[list[str], Any]:
    """`section.key=value` with value read as a TOML literal, else a string."""
    if "=" not in text:
        raise ConfigError(f"override {text!r} is not of the form section.key=value")
    path, raw = text.split("=", 1)
    keys = [k.strip() for k in path.split(".")]
    if len(keys) < 2 or not all(keys):
        raise ConfigError(f"override key {path!r} must be a dotted path")
    try:
        value = tomllib.loads(f"value = {raw.strip()}")["value"]
    except tomllib.TOMLDecodeError:
        value = raw.strip()
    return keys, value


def apply_overrides(raw: dict, overrides: Iterable[str]) -> dict:
    for text in overrides:
        keys, value = parse_override(text)
        node = raw
        for key in keys[:-1]:
            node = node.setdefault(key, {})
            if not isinstance(node, dict):
                raise ConfigError(f"override {text!r} descends into a non-table")
        node[keys[-1]] = value
    return raw


def config_from_dict(raw: dict) -> RunConfig:
    unknown = set(raw) - set(SECTIONS)
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(sorted(unknown))}")
    for required in ("system", "sampling"):
        if required not in raw:
            raise ConfigError(f"missing required section [{required}]")

    output = dict(raw.get("output", {}))
    env_dir = os.environ.get(OUTPUT_DIR_ENV, "").strip()
    if env_dir:
        output["dir"] = env_dir
    raw = {**raw, "output": output}

    sections = {name: _build_section(name, cls, raw[name]) for name, cls in SECTIONS.items() if name in raw}
    config = RunConfig(**sections)
    validate(config)
    return config


def load_config(path: str | Path, overrides: Iterable[str] = ()) -> RunConfig:
    """Read a TOML run configuration and apply dotted overrides."""
    try:
        with open(path, "rb") as handle:
            raw = tomllib.load(handle)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    config = config_from_dict(apply_overrides(raw, overrides))
    logger.debug("Loaded %s (hash %s)", path, config.config_hash())
    return config


def validate(config: RunConfig) -> None:
    system = config.system
    if not system.preset and not system.polys:
        raise ConfigError("system needs either preset or polys")
    if system.preset and system.preset not in PRESETS:
        raise ConfigError(f"unknown preset {system.preset!r}; available: {', '.join(PRESETS)}")
    if system.polys and not system.weights:
        raise ConfigError("missing required key system.weights")
    if config.sampling.N < 1 or config.sampling.n_max < 1:
        raise ConfigError("sampling.N and sampling.n_max must be >= 1")
    try:
        config.grid.to_grid()
    except ValueError as exc:
        raise ConfigError(f"grid: {exc}") from exc


def build_generator_system(section: SystemConfig) -> GeneratorSystem:
    """The generator system a configuration describes, trap certified when given."""
    try:
        if section.preset:
            factory = PRESETS[section.preset]
            return factory(section.weights) if section.weights else factory()
        polys = [parse_polynomial(text) for text in section.polys]
        sys = build_system(polys, section.weights, name=section.name)
    except ColiseumError as exc:
        raise ConfigError(f"system: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"system: {exc}") from exc
    if section.trap or section.trap_mask:
        try:
            disks = tuple(Disk(complex(re, im), r) for re, im, r in section.trap)
            mask = read_window_mask(Path(section.trap_mask), section.trap_mask_rect) if section.trap_mask else None
        except ValueError as exc:
            raise ConfigError(f"system.trap: {exc}") from exc
        sys = with_certified_trap(sys, TrapRegion(disks=disks, mask=mask))
    return sys
