"""Tests for run configuration loading, overrides and hashing."""

import numpy as np
import pytest

from devils_coliseum.config import (
    OUTPUT_DIR_ENV,
    apply_overrides,
    build_generator_system,
    config_from_dict,
    load_config,
    parse_override,
)
from devils_coliseum.errors import ConfigError
from devils_coliseum.field.export import write_mask_pgm
from devils_coliseum.field.masks import disk_mask
from devils_coliseum.field.types import GridSpec
from devils_coliseum.semigroup.system import COLISEUM_H1, COLISEUM_H2

MINIMAL = """
[system]
preset = "coliseum"

[sampling]
seed = 11
"""


def write(tmp_path, text: str):
    path = tmp_path / "run.toml"
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture(autouse=True)
def no_output_env(monkeypatch) -> None:
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)


def test_minimal_config_uses_defaults(tmp_path) -> None:
    config = load_config(write(tmp_path, MINIMAL))
    assert config.sampling.seed == 11
    assert config.sampling.N == 500
    assert config.grid.to_grid().width == 256
    assert config.grid.rect == (-4.6, 4.6, -4.6, 4.6)
    assert config.output.artifact("T.pgm").name == "coliseum_T.pgm"


def test_seed_is_required() -> None:
    with pytest.raises(ConfigError, match="sampling.seed"):
        config_from_dict({"system": {"preset": "coliseum"}, "sampling": {"N": 10}})


@pytest.mark.parametrize(
    ("raw", "message"),
    [
        ({"sampling": {"seed": 1}}, "system"),
        ({"system": {"preset": "coliseum"}, "sampling": {"seed": 1}, "extra": {}}, "unknown section"),
        ({"system": {"preset": "coliseum", "colour": 1}, "sampling": {"seed": 1}}, "unknown key"),
        ({"system": {"polys": ["0,0,1", "0,0,2"]}, "sampling": {"seed": 1}}, "system.weights"),
        ({"system": {"preset": "nowhere"}, "sampling": {"seed": 1}}, "unknown preset"),
        ({"system": {"preset": "coliseum"}, "sampling": {"seed": 1, "N": 0}}, "sampling.N"),
        ({"system": {"preset": "coliseum"}, "sampling": {"seed": 1}, "grid": {"width": 1}}, "grid"),
        ({"system": {"preset": "coliseum"}, "sampling": 3}, "must be a table"),
    ],
)
def test_invalid_configs(raw: dict, message: str) -> None:
    with pytest.raises(ConfigError, match=message):
        config_from_dict(raw)


def test_malformed_toml_is_a_config_error(tmp_path) -> None:
    with pytest.raises(ConfigError):
        load_config(write(tmp_path, "[system\npreset = 1"))


def test_override_values_are_toml_literals() -> None:
    assert parse_override("grid.width=64") == (["grid", "width"], 64)
    assert parse_override("system.weights=[0.3, 0.7]") == (["system", "weights"], [0.3, 0.7])
    assert parse_override('output.prefix="run"') == (["output", "prefix"], "run")
    assert parse_override("output.dir=results/a") == (["output", "dir"], "results/a")
    with pytest.raises(ConfigError):
        parse_override("grid.width")
    with pytest.raises(ConfigError):
        parse_override("width=3")


def test_overrides_reach_nested_tables(tmp_path) -> None:
    config = load_config(write(tmp_path, MINIMAL), ["grid.width=64", "sampling.N=20", "verify.checks=['trap']"])
    assert config.grid.width == 64
    assert config.sampling.N == 20
    assert config.verify.checks == ("trap",)
    with pytest.raises(ConfigError):
        apply_overrides({"grid": 3}, ["grid.width=4"])


def test_hash_ignores_output_but_not_sampling(tmp_path) -> None:
    path = write(tmp_path, MINIMAL)
    base = load_config(path)
    assert load_config(path, ["output.dir=elsewhere"]).config_hash() == base.config_hash()
    assert load_config(path, ["sampling.seed=12"]).config_hash() != base.config_hash()
    assert len(base.config_hash()) == 16


def test_output_dir_from_environment(tmp_path, monkeypatch) -> None:
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "out"))
    config = load_config(write(tmp_path, MINIMAL))
    assert config.output.path == tmp_path / "out"


def test_explicit_polynomials_and_trap() -> None:
    config = config_from_dict(
        {
            "system": {
                "polys": ["0,0,-2,0,1", "0,0,0,0,0.015625"],
                "weights": [0.5, 0.5],
                "trap": [[0.0, 0.0, 0.4], [-1.0, 0.0, 0.2]],
                "name": "explicit",
            },
            "sampling": {"seed": 1},
        }
    )
    sys = build_generator_system(config.system)
    assert sys.generators == (COLISEUM_H1, COLISEUM_H2)
    assert sys.trap is not None
    assert sys.name == "explicit"


def test_preset_weights_and_bad_polynomials() -> None:
    config = config_from_dict({"system": {"preset": "coliseum", "weights": [0.2, 0.8]}, "sampling": {"seed": 1}})
    assert build_generator_system(config.system).weights == (0.2, 0.8)

    bad = config_from_dict({"system": {"polys": ["0,0,1", "x"], "weights": [0.5, 0.5]}, "sampling": {"seed": 1}})
    with pytest.raises(ConfigError, match="system"):
        build_generator_system(bad.system)

    duplicate = config_from_dict(
        {"system": {"polys": ["0,0,1", "0,0,1"], "weights": [0.5, 0.5]}, "sampling": {"seed": 1}}
    )
    with pytest.raises(ConfigError):
        build_generator_system(duplicate.system)


def test_trap_mask_is_loaded_and_certified(tmp_path) -> None:
    rect = (-1.0, 1.0, -1.0, 1.0)
    grid = GridSpec(*rect, 64, 48)
    path = write_mask_pgm(tmp_path / "trap.pgm", disk_mask(grid, 0j, 0.5))
    config = config_from_dict(
        {
            "system": {
                "polys": ["0,0,1", "0,0,0.5"],
                "weights": [0.5, 0.5],
                "trap_mask": str(path),
                "trap_mask_rect": list(rect),
            },
            "sampling": {"seed": 1},
        }
    )
    sys = build_generator_system(config.system)
    assert sys.trap is not None
    region = sys.trap_region
    assert region is not None and region.mask is not None
    assert region.mask.grid == grid
    assert region.mask.count == disk_mask(grid, 0j, 0.5).count
    assert region.contains(np.array([0.1 + 0.1j, 0.9 + 0j])).tolist() == [True, False]


def test_trap_mask_of_wrong_window_is_a_config_error(tmp_path) -> None:
    grid = GridSpec.square(1.0, 16)
    path = write_mask_pgm(tmp_path / "trap.pgm", disk_mask(grid, 0j, 0.5))
    config = config_from_dict(
        {
            "system": {
                "polys": ["0,0,1", "0,0,0.5"],
                "weights": [0.5, 0.5],
                "trap_mask": str(path),
                "trap_mask_rect": [1.0, -1.0, -1.0, 1.0],
            },
            "sampling": {"seed": 1},
        }
    )
    with pytest.raises(ConfigError, match="system.trap"):
        build_generator_system(config.system)


def test_readme_explicit_system() -> None:
    config = config_from_dict(
        {"system": {"polys": ["-1,0,1", "0,0,0.25"], "weights": [0.5, 0.5]}, "sampling": {"seed": 1}}
    )
    sys = build_generator_system(config.system)
    assert [g.degree for g in sys.generators] == [2, 2]
    assert sys.trap is None
