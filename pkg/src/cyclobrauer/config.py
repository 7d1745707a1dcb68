"""Run configuration — loaded from `--params-file`, `cyclobrauer.toml` (preferred) or
`[tool.cyclobrauer]` in `pyproject.toml`, Pydantic-validated.

Rationals may be written as TOML integers or as strings like "-3/2".
"""

from __future__ import annotations

import tomllib
from fractions import Fraction
from pathlib import Path
from typing import Annotated

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, ValidationError

from cyclobrauer.errors import ParameterError


def _to_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int | str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


# A rational that reads from int/str and dumps back to "p/q" text.
Rational = Annotated[Fraction, BeforeValidator(_to_fraction), PlainSerializer(str, return_type=str)]


class ParamsConfig(BaseModel):
    """Abstract cyclotomic parameters: 𝐟 roots, optional 𝐠 roots, ω seeds."""

    model_config = ConfigDict(extra="forbid")

    k: int = 2
    u: list[Rational] = Field(default_factory=lambda: [Fraction(0), Fraction(0)])
    ubar: list[Rational] | None = None  # None → derived from u and the ω seeds
    # ω₀..ω_{k-1}; longer lists are checked against the admissibility recursion.
    omega: list[Rational] = Field(default_factory=lambda: [Fraction(0), Fraction(4)])


class SchurWeylConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = 2
    n: int = 2
    p: Rational = Fraction(0)
    q: Rational = Fraction(2)


class RunSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = 0
    format: str = "text"  # "text" | "json"
    cache_dir: str | None = ".cyclobrauer-cache"  # None → no persisted structure constants
    max_module_dim: int = 300_000  # size guard for the matrix model
    samples: int = 100  # random triples/pairs in sampled property checks


class CycloConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: ParamsConfig = Field(default_factory=ParamsConfig)
    schur_weyl: SchurWeylConfig = Field(default_factory=SchurWeylConfig)
    run: RunSettings = Field(default_factory=RunSettings)

    # Where this config was loaded from (None if defaults). Not part of the schema input.
    source_path: Path | None = Field(default=None, exclude=True)


def _read_toml(path: Path) -> dict:
    with path.open("rb") as fh:
        return tomllib.load(fh)


def find_config(root: Path) -> tuple[dict, Path | None]:
    """Return the raw config table and the file it came from.

    `cyclobrauer.toml` wins over `pyproject.toml`'s `[tool.cyclobrauer]`. Returns ({}, None)
    when neither exists.
    """
    own = root / "cyclobrauer.toml"
    if own.is_file():
        return _read_toml(own), own
    pyproject = root / "pyproject.toml"
    if pyproject.is_file():
        data = _read_toml(pyproject)
        table = data.get("tool", {}).get("cyclobrauer")
        if table is not None:
            return table, pyproject
    return {}, None


def load_config(root: Path, params_file: Path | None = None) -> CycloConfig:
    """Load + validate the run configuration. An explicit `params_file` wins over discovery."""
    if params_file is not None:
        if not params_file.is_file():
            raise ParameterError(f"params file not found: {params_file}")
        table, path = _read_toml(params_file), params_file
    else:
        table, path = find_config(root)
    try:
        cfg = CycloConfig.model_validate(table)
    except ValidationError as exc:
        raise ParameterError(f"invalid configuration in {path}: {exc}") from exc
    cfg.source_path = path
    return cfg
