"""Run configuration: defaults, discovery, explicit params files, validation."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from cyclobrauer.config import load_config
from cyclobrauer.errors import ParameterError
from cyclobrauer.params import Parameters


def test_config_defaults(tmp_path: Path):
    cfg = load_config(tmp_path)
    assert cfg.params.k == 2
    assert cfg.params.omega == [0, 4]
    assert cfg.schur_weyl.m == cfg.schur_weyl.n == 2
    assert cfg.run.format == "text"
    assert cfg.source_path is None


def test_own_file_wins_over_pyproject(tmp_path: Path):
    (tmp_path / "pyproject.toml").write_text("[tool.cyclobrauer.run]\nseed = 5\n")
    (tmp_path / "cyclobrauer.toml").write_text("[run]\nseed = 9\n")
    cfg = load_config(tmp_path)
    assert cfg.run.seed == 9
    assert cfg.source_path == tmp_path / "cyclobrauer.toml"


def test_pyproject_table(tmp_path: Path):
    (tmp_path / "pyproject.toml").write_text('[tool.cyclobrauer.schur_weyl]\np = "-3/2"\nq = 1\n')
    cfg = load_config(tmp_path)
    assert cfg.schur_weyl.p == Fraction(-3, 2)
    assert cfg.schur_weyl.q == 1


def test_params_file_builds_parameters(tmp_path: Path):
    path = tmp_path / "level3.toml"
    path.write_text('[params]\nk = 3\nu = [0, 1, "1/2"]\nomega = [1, 0, 0]\n')
    cfg = load_config(tmp_path, path)
    params = Parameters.from_config(cfg.params)
    assert params.k == 3
    assert params.u == (0, 1, Fraction(1, 2))


def test_missing_params_file(tmp_path: Path):
    with pytest.raises(ParameterError):
        load_config(tmp_path, tmp_path / "nope.toml")


def test_unknown_keys_are_rejected(tmp_path: Path):
    (tmp_path / "cyclobrauer.toml").write_text("[run]\nthreads = 4\n")
    with pytest.raises(ParameterError):
        load_config(tmp_path)


def test_bad_rational(tmp_path: Path):
    (tmp_path / "cyclobrauer.toml").write_text('[schur_weyl]\np = "x/2"\n')
    with pytest.raises(ParameterError):
        load_config(tmp_path)
