"""Tests for the command-line entry point."""

import json

import numpy as np
import pytest

from devils_coliseum import cli
from devils_coliseum.cli import EXIT_CONFIG, EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_VERIFY, main
from devils_coliseum.config import OUTPUT_DIR_ENV
from devils_coliseum.errors import RootSolveFailure
from devils_coliseum.field.execution import EXECUTOR_ENV

SMALL = """
[system]
preset = "coliseum"

[sampling]
seed = 5
N = 10
n_max = 40

[grid]
width = 16
height = 16

[analysis]
cloud_points = 200

[staircase]
points = 11
attractor_depth = 4

[output]
prefix = "t"
"""


@pytest.fixture
def config_path(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "out"))
    path = tmp_path / "run.toml"
    path.write_text(SMALL, encoding="utf-8")
    return path


def test_staircase_command_writes_csv_and_attractor(config_path, capsys) -> None:
    assert main(["staircase", str(config_path), "--log-level", "WARNING"]) == EXIT_OK

    out = config_path.parent / "out"
    lines = (out / "t_staircase.csv").read_text().splitlines()
    assert lines[0].startswith("# config_hash ")
    assert lines[1] == "x,value"
    table = np.loadtxt(out / "t_staircase.csv", delimiter=",", skiprows=2)
    assert table.shape == (11, 2)
    assert table[0, 1] == 0.0
    assert table[-1, 1] == 1.0
    assert table[5, 1] == pytest.approx(0.5)

    attractor = json.loads((out / "t_attractor.json").read_text())
    assert attractor["attractor"]["cantor"] is True
    assert json.loads(capsys.readouterr().out)["command"] == "staircase"


def test_render_command_is_reproducible_across_workers(config_path, monkeypatch) -> None:
    out = config_path.parent / "out"
    assert main(["render", str(config_path), "--workers", "1"]) == EXIT_OK
    first = (out / "t_T.pgm").read_bytes()
    meta = json.loads((out / "t_meta.json").read_text())
    assert meta["field"]["N"] == 10
    assert meta["cloud"]["points"] == 200
    assert (out / "t_julia.pgm").exists()
    assert (out / "t_cloud.csv").exists()

    monkeypatch.setenv(EXECUTOR_ENV, "threads")
    assert main(["render", str(config_path), "--workers", "3"]) == EXIT_OK
    assert (out / "t_T.pgm").read_bytes() == first


def test_verify_subset_passes(config_path) -> None:
    code = main(["verify", str(config_path), "--set", "verify.checks=['closed_forms', 'invert']"])
    assert code == EXIT_OK
    report = json.loads((config_path.parent / "out" / "t_verify.json").read_text())
    assert report["passed"] is True
    assert {check["name"] for check in report["checks"]} == {
        "closed_forms.u_below_one",
        "closed_forms.dim_bound",
        "closed_forms.sum_inv_deg",
        "invert",
    }


def test_unknown_check_is_a_config_error(config_path) -> None:
    assert main(["verify", str(config_path), "--set", "verify.checks=['nope']"]) == EXIT_CONFIG


def test_missing_weights_is_a_config_error(tmp_path) -> None:
    path = tmp_path / "bad.toml"
    path.write_text('[system]\npolys = ["0,0,1", "0,0,2"]\n[sampling]\nseed = 1\n', encoding="utf-8")
    assert main(["render", str(path)]) == EXIT_CONFIG


def test_missing_config_file_is_an_io_error(tmp_path) -> None:
    assert main(["render", str(tmp_path / "absent.toml")]) == EXIT_IO


def test_domain_error_has_its_own_exit_code(config_path, monkeypatch, caplog) -> None:
    def diverging(config, workers):
        raise RootSolveFailure("roots of z^4 - 2z^2 did not converge")

    monkeypatch.setitem(cli.COMMANDS, "render", (diverging, "render"))
    assert main(["render", str(config_path)]) == EXIT_DOMAIN
    assert "RootSolveFailure: roots of z^4 - 2z^2 did not converge" in caplog.text


def test_workers_must_be_positive(config_path) -> None:
    with pytest.raises(SystemExit) as info:
        main(["render", str(config_path), "--workers", "0"])
    assert info.value.code == 2


def test_analyze_writes_closed_forms(config_path, capsys) -> None:
    assert main(["analyze", str(config_path), "--workers", "1", "--log-level", "ERROR"]) == EXIT_OK

    report = json.loads((config_path.parent / "out" / "t_analysis.json").read_text())
    assert report["exponents"]["u"]["value"] == pytest.approx(0.5)
    assert report["exponents"]["dim_lower_bound"] == pytest.approx(1.5)
    assert [row["t"] for row in report["invert_t"]] == pytest.approx([0.25, 0.5, 1 / 3])
    # A 16x16 window is narrower than the largest Hölder radius.
    assert report["holder"]["points"] == 0
    assert "monotonicity" in report
    assert json.loads(capsys.readouterr().out)["command"] == "analyze"


def test_classify3_writes_one_run_per_size(config_path, capsys) -> None:
    code = main(
        [
            "classify3",
            str(config_path),
            "--set",
            "classify3.sizes=[48]",
            "--set",
            "classify3.cloud_points=2000",
            "--log-level",
            "ERROR",
        ]
    )
    assert code in (EXIT_OK, EXIT_VERIFY)

    report = json.loads((config_path.parent / "out" / "t_classify3.json").read_text())
    assert [run["size"] for run in report["runs"]] == [48]
    assert report["stable"] is (code == EXIT_OK)
    assert json.loads(capsys.readouterr().out)["command"] == "classify3"
