"""The cyclobrauer command line."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

from cyclobrauer import cli
from cyclobrauer.errors import EXIT_PARAMS, ParameterError

runner = CliRunner()


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.chdir(tmp_path)
    cli._ctx.update(format=None, out=None, params_file=None, seed=None)


def test_version():
    result = runner.invoke(cli.app, ["--version"])
    assert result.exit_code == 0
    assert result.stdout.startswith("cyclobrauer ")


def test_dim_level_one():
    result = runner.invoke(cli.app, ["dim", "--k", "1", "--r", "2", "--t", "2"])
    assert result.exit_code == 0, result.stdout
    assert "dimension: 24" in result.stdout


def test_dim_json():
    result = runner.invoke(cli.app, ["--format", "json", "dim"])
    assert result.exit_code == 0, result.stdout
    payload = json.loads(result.stdout)
    assert payload["schema"] == "cyclobrauer.report/1"
    assert payload["data"]["dimension"] == 8


def test_out_writes_the_report(tmp_path: Path):
    target = tmp_path / "report.json"
    result = runner.invoke(cli.app, ["--out", str(target), "dim"])
    assert result.exit_code == 0, result.stdout
    assert json.loads(target.read_text())["ok"] is True


def test_params_file(tmp_path: Path):
    (tmp_path / "level3.toml").write_text('[params]\nk = 3\nu = [0, 1, 2]\nomega = [1, 0, 0]\n')
    result = runner.invoke(cli.app, ["--format", "json", "--params-file", "level3.toml", "dim"])
    assert result.exit_code == 0, result.stdout
    assert json.loads(result.stdout)["data"]["dimension"] == 18


def test_bad_format_is_a_parameter_error(monkeypatch: pytest.MonkeyPatch):
    result = runner.invoke(cli.app, ["--format", "xml", "dim"])
    assert isinstance(result.exception, ParameterError)
    monkeypatch.setattr(sys, "argv", ["cyclobrauer", "--format", "xml", "dim"])
    with pytest.raises(SystemExit) as info:
        cli.main()
    assert info.value.code == EXIT_PARAMS


def test_weightdiag_default():
    result = runner.invoke(cli.app, ["weightdiag"])
    assert result.exit_code == 0, result.stdout
    assert "D^top" in result.stdout
    assert "atypicality" in result.stdout


def test_weightdiag_summands():
    result = runner.invoke(cli.app, ["weightdiag", "--summands", "1"])
    assert result.exit_code == 0, result.stdout
    assert "1 tilting summands" in result.stdout


def test_weightdiag_bipartition():
    result = runner.invoke(cli.app, ["weightdiag", "--lambda", "[[],[1]]"])
    assert result.exit_code == 0, result.stdout
    assert "not Kleshchev" in result.stdout


def test_weightdiag_index_round_trip():
    result = runner.invoke(cli.app, ["--format", "json", "weightdiag", "--mu", "[[1],[]]"])
    assert result.exit_code == 0, result.stdout
    names = [c["name"] for c in json.loads(result.stdout)["checks"]]
    assert "triple" in names


def test_bad_weight_is_a_parameter_error():
    result = runner.invoke(cli.app, ["weightdiag", "--weight", "1,2|3"])
    assert isinstance(result.exception, ParameterError)


def test_main_exit_code(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(sys, "argv", ["cyclobrauer", "weightdiag", "--weight", "1|2"])
    with pytest.raises(SystemExit) as info:
        cli.main()
    assert info.value.code == EXIT_PARAMS


def test_hecke():
    result = runner.invoke(cli.app, ["hecke", "--r", "1", "--samples", "2"])
    assert result.exit_code == 0, result.stdout


def test_hecke_needs_level_two(tmp_path: Path):
    (tmp_path / "level1.toml").write_text("[params]\nk = 1\nu = [0]\nomega = [3]\n")
    result = runner.invoke(cli.app, ["--params-file", "level1.toml", "hecke"])
    assert isinstance(result.exception, ParameterError)


@pytest.mark.slow
def test_schurweyl():
    result = runner.invoke(cli.app, ["--format", "json", "schurweyl", "--no-commutant", "--no-hwv"])
    assert result.exit_code == 0, result.stdout
    assert json.loads(result.stdout)["ok"] is True
