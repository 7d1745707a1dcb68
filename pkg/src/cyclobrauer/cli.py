"""Typer CLI. Global flags `--format`, `--out`, `--params-file`, `--seed`, `-v`; exit codes are
centralized in `main()`: 0 ok · 2 a checked identity failed · 3 bad parameters.
"""

from __future__ import annotations

import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Annotated

import typer

from cyclobrauer.errors import CycloBrauerError, ParameterError

app = typer.Typer(
    name="cyclobrauer",
    help="Exact cyclotomic walled Brauer algebras, their cellular structure and the gl(m|n) matrix model.",
    no_args_is_help=True,
    add_completion=False,
)

# Populated by the callback; read by commands.
_ctx: dict = {"format": None, "out": None, "params_file": None, "seed": None}


def _version_callback(value: bool) -> None:
    if value:
        from cyclobrauer import __version__

        typer.echo(f"cyclobrauer {__version__}")
        raise typer.Exit()


@app.callback()
def _main(
    format_: Annotated[
        str | None, typer.Option("--format", help="text or json (default: the configured run.format).")
    ] = None,
    out: Annotated[Path | None, typer.Option("--out", help="Also write the JSON report to this file.")] = None,
    params_file: Annotated[
        Path | None, typer.Option("--params-file", help="TOML file with [params], [schur_weyl] and [run] tables.")
    ] = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Seed for sampled checks (default: run.seed).")] = None,
    verbose: Annotated[int, typer.Option("--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG.")] = 0,
    version: Annotated[
        bool,
        typer.Option("--version", callback=_version_callback, is_eager=True, help="Show the version and exit."),
    ] = False,
) -> None:
    if format_ is not None and format_ not in ("text", "json"):
        raise ParameterError(f"--format must be text or json, got {format_!r}")
    _ctx.update(format=format_, out=out, params_file=params_file, seed=seed)
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _config():
    from cyclobrauer.config import load_config

    return load_config(Path.cwd(), _ctx["params_file"])


def _seed(cfg) -> int:
    return cfg.run.seed if _ctx["seed"] is None else _ctx["seed"]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"not a rational: {text!r}") from exc


def _rationals(text: str) -> list[Fraction]:
    return [_rational(part) for part in text.split(",") if part.strip()]


def _emit(report, cfg, preface: str | None = None) -> None:
    from cyclobrauer.report import render_text

    payload = report.to_json()
    if _ctx["out"] is not None:
        _ctx["out"].write_text(json.dumps(payload, indent=2, default=str) + "\n")
    if (_ctx["format"] or cfg.run.format) == "json":
        typer.echo(json.dumps(payload, indent=2, default=str))
    else:
        if preface:
            typer.echo(preface)
        typer.echo(render_text(report))
    raise typer.Exit(code=report.exit_code)


def _parameters(cfg, k: int | None, u: str | None, omega: str | None, ubar: str | None):
    """The configured parameters, with command-line overrides; a bare --k pads with zeros."""
    from cyclobrauer.params import Parameters

    base = cfg.params
    roots = _rationals(u) if u is not None else None
    seeds = _rationals(omega) if omega is not None else None
    if k is not None and roots is None and k != base.k:
        roots = [Fraction(0)] * k
        seeds = seeds if seeds is not None else [Fraction(0)] * k
    roots = roots if roots is not None else list(base.u)
    seeds = seeds if seeds is not None else list(base.omega)
    if k is not None and len(roots) != k:
        raise ParameterError(f"--k {k} but {len(roots)} roots given")
    bar = _rationals(ubar) if ubar is not None else base.ubar
    return Parameters.create(roots, seeds, bar)


KOption = Annotated[int | None, typer.Option("--k", help="Level k (default: the number of configured roots).")]
UOption = Annotated[str | None, typer.Option("--u", help="Roots of 𝐟, comma separated, e.g. '0,-3/2'.")]
OmegaOption = Annotated[str | None, typer.Option("--omega", help="Seeds ω₀..ω_{k−1}, comma separated.")]
UbarOption = Annotated[str | None, typer.Option("--ubar", help="Roots of 𝐠, checked against the derived 𝐠.")]


# --- algebra -----------------------------------------------------------------------------------


@app.command()
def dim(
    r: Annotated[int, typer.Option("--r", help="Number of unbarred strands.")] = 1,
    t: Annotated[int, typer.Option("--t", help="Number of barred strands.")] = 1,
    k: KOption = None,
    u: UOption = None,
    omega: OmegaOption = None,
    ubar: UbarOption = None,
    samples: Annotated[int, typer.Option("--samples", help="Random triples for associativity.")] = 10,
) -> None:
    """Basis count of 𝓑_{k,r,t}, the ω sequence, and sampled associativity."""
    from cyclobrauer.algebra import dimension_report

    cfg = _config()
    params = _parameters(cfg, k, u, omega, ubar)
    _emit(dimension_report(params, r, t, seed=_seed(cfg), samples=samples), cfg)


@app.command()
def cellular(
    r: Annotated[int, typer.Option("--r", help="Number of unbarred strands.")] = 1,
    t: Annotated[int, typer.Option("--t", help="Number of barred strands.")] = 1,
    u: UOption = None,
    omega: OmegaOption = None,
    ubar: UbarOption = None,
) -> None:
    """Λ_{2,r,t}, the cellular basis checks, cell dimensions, Gram ranks and simplicity."""
    from cyclobrauer.cellular import cellular_report

    cfg = _config()
    params = _parameters(cfg, None, u, omega, ubar)
    _emit(cellular_report(params, r, t, seed=_seed(cfg), samples=min(cfg.run.samples, 24)), cfg)


@app.command()
def hecke(
    r: Annotated[int, typer.Option("--r", help="Rank of H_{2,r}.")] = 2,
    u1: Annotated[str | None, typer.Option("--u1", help="First Hecke parameter (default: −u₁ of the config).")] = None,
    u2: Annotated[str | None, typer.Option("--u2", help="Second Hecke parameter (default: −u₂ of the config).")] = None,
    samples: Annotated[int, typer.Option("--samples", help="Random pairs for the walled product check.")] = 20,
) -> None:
    """S₁–S₄ bases, vanishing of π_a H π_b, cell modules, and native vs. walled products."""
    from cyclobrauer.hecke import hecke_report

    cfg = _config()
    if cfg.params.k != 2 and (u1 is None or u2 is None):
        raise ParameterError("the configured parameters are not level two; pass --u1 and --u2")
    h1 = _rational(u1) if u1 is not None else -cfg.params.u[0]
    h2 = _rational(u2) if u2 is not None else -cfg.params.u[1]
    _emit(hecke_report(r, h1, h2, samples=samples, seed=_seed(cfg)), cfg)


# --- the matrix model -----------------------------------------------------------------------


@app.command()
def schurweyl(
    m: Annotated[int | None, typer.Option("--m", help="Even rank (default: schur_weyl.m).")] = None,
    n: Annotated[int | None, typer.Option("--n", help="Odd rank (default: schur_weyl.n).")] = None,
    p: Annotated[str | None, typer.Option("--p", help="λ_pq parameter p.")] = None,
    q: Annotated[str | None, typer.Option("--q", help="λ_pq parameter q.")] = None,
    r: Annotated[int, typer.Option("--r", help="Copies of V.")] = 1,
    t: Annotated[int, typer.Option("--t", help="Copies of W.")] = 1,
    commutant: Annotated[bool, typer.Option("--commutant/--no-commutant", help="Solve for End_gl(M).")] = True,
    hwv: Annotated[bool, typer.Option("--hwv/--no-hwv", help="Build and certify highest weight vectors.")] = True,
) -> None:
    """Relation audit, rank of φ, the commutant, and highest weight vectors of M_pq^{rt}."""
    from cyclobrauer.superalgebra import SuperModule, schur_weyl_report

    cfg = _config()
    sw = cfg.schur_weyl
    module = SuperModule(
        sw.m if m is None else m,
        sw.n if n is None else n,
        sw.p if p is None else _rational(p),
        sw.q if q is None else _rational(q),
        r,
        t,
        max_dim=cfg.run.max_module_dim,
    )
    _emit(schur_weyl_report(module, seed=_seed(cfg), commutant=commutant, highest_weights=hwv), cfg)


def _bipartition(text: str):
    from cyclobrauer.combinatorics import Bipartition

    try:
        return Bipartition.from_json(json.loads(text))
    except (json.JSONDecodeError, TypeError) as exc:
        raise ParameterError(f"not a bipartition: {text!r} (expected e.g. '[[2,1],[1]]')") from exc


def _weight(text: str, m: int, n: int):
    from cyclobrauer.weightdiag import SuperWeight

    left, sep, right = text.partition("|")
    if not sep:
        raise ParameterError(f"a weight is written 'a,b,…|c,d,…', got {text!r}")
    weight = SuperWeight.of(_rationals(left), _rationals(right))
    if (weight.m, weight.n) != (m, n):
        raise ParameterError(f"weight {weight} has shape ({weight.m}|{weight.n}), expected ({m}|{n})")
    return weight


@app.command()
def weightdiag(
    weight: Annotated[str | None, typer.Option("--weight", help="A dominant weight 'a,b|c,d'.")] = None,
    lam: Annotated[str | None, typer.Option("--lambda", help="A bipartition, read as λ̄ = λ_pq + (λ¹|λ²).")] = None,
    mu: Annotated[str | None, typer.Option("--mu", help="μ of an index (f, μ, ν).")] = None,
    nu: Annotated[str | None, typer.Option("--nu", help="ν of an index (f, μ, ν).")] = None,
    f: Annotated[int, typer.Option("--f", help="f of an index (f, μ, ν).")] = 0,
    m: Annotated[int | None, typer.Option("--m", help="Even rank (default: schur_weyl.m).")] = None,
    n: Annotated[int | None, typer.Option("--n", help="Odd rank (default: schur_weyl.n).")] = None,
    p: Annotated[str | None, typer.Option("--p", help="λ_pq parameter p.")] = None,
    q: Annotated[str | None, typer.Option("--q", help="λ_pq parameter q.")] = None,
    summands: Annotated[
        int | None, typer.Option("--summands", help="List tilting summands of M_pq^{r0} for this r.")
    ] = None,
) -> None:
    """Render D_λ and D_{λ^top}; report atypicality, Kleshchev and tilting verdicts."""
    from cyclobrauer import weightdiag as wd
    from cyclobrauer.cellular import CellIndex
    from cyclobrauer.combinatorics import Bipartition, kleshchev
    from cyclobrauer.hecke import kleshchev_count
    from cyclobrauer.report import Report

    cfg = _config()
    sw = cfg.schur_weyl
    m = sw.m if m is None else m
    n = sw.n if n is None else n
    pv = sw.p if p is None else _rational(p)
    qv = sw.q if q is None else _rational(q)
    report = Report(f"weight diagram gl({m}|{n}) p={pv} q={qv}")
    bipartition = None
    index = None
    if weight is not None:
        xi = _weight(weight, m, n)
    elif lam is not None:
        bipartition = _bipartition(lam)
        xi = wd.bipartition_weight(bipartition, pv, qv, m, n)
    elif mu is not None or nu is not None:
        index = CellIndex(
            f, _bipartition(mu) if mu else Bipartition(), _bipartition(nu) if nu else Bipartition()
        )
        xi = wd.triple_to_weight(index, pv, qv, m, n)
    else:
        xi = wd.lambda_pq(m, n, pv, qv)

    diagram = wd.weight_diagram(xi)
    top = wd.lambda_top(diagram)
    support = diagram.support | top.support
    lo, hi = min(support, default=0) - 1, max(support, default=0) + 1
    preface = f"D  {xi}\n{diagram.render(lo, hi)}\n\nD^top  {wd.diagram_weight(top, m, n)}\n{top.render(lo, hi)}\n"
    report.add(True, "weight", f"{xi}, atypicality {wd.atypicality(xi)}")
    report.add(diagram.counts() == top.counts(), "top", f"λ^top = {wd.diagram_weight(top, m, n)}")

    if index is not None:
        back = wd.weight_to_triple(xi, pv, qv, index.f + index.mu.size, index.f + index.nu.size)
        report.add(back == index, "triple", f"{index} ↦ {xi} ↦ {back}")

    integral = (pv - qv).denominator == 1 and pv - qv <= -m
    if bipartition is not None and integral:
        verdict = wd.tilting_criterion(bipartition, pv, qv, m, n)
        report.add(verdict.consistent, "tilting", f"direct {verdict.direct}, via λ^top {verdict.via_top}")
        klesh = kleshchev(bipartition.dual(), -pv, m - qv)
        report.add(True, "Kleshchev", f"{bipartition.dual()} is {'' if klesh else 'not '}Kleshchev")

    rows = []
    if summands is not None:
        if not integral:
            raise ParameterError(f"tilting summands need integral p − q ≤ −m, got p={pv}, q={qv}")
        found = wd.tilting_summands(summands, pv, qv, m, n)
        expected = kleshchev_count(summands, -pv, m - qv)
        report.add(
            len(found) == expected,
            "summands",
            f"{len(found)} tilting summands, {expected} Kleshchev bipartitions of {summands}",
        )
        rows = [str(b) for b in found]
    report.data = {
        "weight": xi.to_json(),
        "diagram": diagram.to_json(),
        "top": top.to_json(),
        "summands": rows,
    }
    _emit(report, cfg, preface)


def main() -> None:
    # CycloBrauerError carries an exit code. It propagates out of the Typer runtime, so
    # translate it to a clean message + process exit here.
    try:
        app()
    except CycloBrauerError as exc:
        print(f"cyclobrauer: {exc}", file=sys.stderr)
        sys.exit(exc.exit_code)


if __name__ == "__main__":
    main()
