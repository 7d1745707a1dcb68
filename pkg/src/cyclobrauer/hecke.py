"""The level-two degenerate Hecke algebra H_{2,r}.

Elements live in the normal form y^ε·w with ε ∈ {0,1}^r. Multiplication is native here and is
cross-checked against the walled Brauer engine at t = 0 through `WalledHeckeAdapter`, which
owns the sign flip x_i = −y_i (so the roots of 𝐟 are the negated Hecke parameters).
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from cyclobrauer import diagrams, linalg
from cyclobrauer.algebra import AlgebraElement, Monomial, WalledBrauerAlgebra, _acc
from cyclobrauer.combinatorics import (
    Bipartition,
    BiTableau,
    GroupAlgebraElement,
    Permutation,
    dominates_strictly,
    enumerate_bipartitions,
    kleshchev,
    standard_tableaux,
    tableau_perm,
    w_a_perm,
    w_lambda,
    young_elements,
    young_subgroup,
)
from cyclobrauer.errors import ParameterError
from cyclobrauer.params import Parameters
from cyclobrauer.report import Report

log = logging.getLogger(__name__)

# (ε, w) standing for y^ε·w
YMonomial = tuple[tuple[int, ...], Permutation]

KINDS = ("S1", "S2", "S3", "S4")


class HeckeAlgebra:
    """H_{2,r} with (y₁ − u₁)(y₁ − u₂) = 0 and s_i y_i − y_{i+1} s_i = −1."""

    def __init__(self, r: int, u1: Fraction | int, u2: Fraction | int):
        if r < 1:
            raise ParameterError(f"H_(2,r) needs r >= 1, got {r}")
        self.r = r
        self.u1 = Fraction(u1)
        self.u2 = Fraction(u2)
        self._memo_y: dict[tuple[int, YMonomial], dict[YMonomial, Fraction]] = {}
        self._products: dict[tuple[YMonomial, YMonomial], dict[YMonomial, Fraction]] = {}
        self._cellular: dict[str, CellularStructure] = {}

    @property
    def context(self) -> tuple:
        return (self.r, self.u1, self.u2)

    @cached_property
    def basis(self) -> list[YMonomial]:
        perms = [Permutation(p) for p in itertools.permutations(range(1, self.r + 1))]
        return [(eps, w) for w in perms for eps in itertools.product((0, 1), repeat=self.r)]

    @cached_property
    def index(self) -> dict[YMonomial, int]:
        return {m: i for i, m in enumerate(self.basis)}

    # --- elements ------------------------------------------------------------------------

    def element(self, terms: Mapping[YMonomial, Fraction | int]) -> HeckeElement:
        return HeckeElement(self, terms)

    def one(self) -> HeckeElement:
        return self.perm(Permutation.identity(self.r))

    def perm(self, w: Permutation) -> HeckeElement:
        return HeckeElement(self, {((0,) * self.r, w): 1})

    def s(self, i: int) -> HeckeElement:
        return self.perm(Permutation.simple(i, self.r))

    def y(self, i: int) -> HeckeElement:
        if not 1 <= i <= self.r:
            raise ParameterError(f"y{i} out of range for r={self.r}")
        eps = tuple(int(j == i) for j in range(1, self.r + 1))
        return HeckeElement(self, {(eps, Permutation.identity(self.r)): 1})

    def group(self, g: GroupAlgebraElement) -> HeckeElement:
        return HeckeElement(self, {((0,) * self.r, w): c for w, c in g.terms.items()})

    def pi(self, a: int, u: Fraction) -> HeckeElement:
        """π_a(u) = (y₁ − u)⋯(y_a − u); π₀ = 1."""
        out = self.one()
        for i in range(1, a + 1):
            out = out * (self.y(i) - self.one() * u)
        return out

    def generators(self) -> list[tuple[str, HeckeElement]]:
        return [(f"s{i}", self.s(i)) for i in range(1, self.r)] + [("y1", self.y(1))]

    # --- product --------------------------------------------------------------------------

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        if a.hecke.context != self.context or b.hecke.context != self.context:
            raise ParameterError("cannot multiply elements of different Hecke algebras")
        out: dict[YMonomial, Fraction] = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                _acc(out, self.product(ma, mb), ca * cb)
        return HeckeElement(self, out)

    def product(self, a: YMonomial, b: YMonomial) -> dict[YMonomial, Fraction]:
        hit = self._products.get((a, b))
        if hit is None:
            eps, w = a
            terms: dict[YMonomial, Fraction] = {b: Fraction(1)}
            for i in reversed(w.reduced_word()):
                terms = self._lift_s(i, terms)
            for i, e in enumerate(eps, 1):
                if e:
                    terms = self._lift_y(i, terms)
            hit = self._products[(a, b)] = terms
        return hit

    def _lift_s(self, i: int, terms: Mapping[YMonomial, Fraction]) -> dict[YMonomial, Fraction]:
        out: dict[YMonomial, Fraction] = {}
        for m, c in terms.items():
            _acc(out, self._s(i, m), c)
        return out

    def _lift_y(self, i: int, terms: Mapping[YMonomial, Fraction]) -> dict[YMonomial, Fraction]:
        out: dict[YMonomial, Fraction] = {}
        for m, c in terms.items():
            _acc(out, self._y(i, m), c)
        return out

    def _s(self, i: int, m: YMonomial) -> dict[YMonomial, Fraction]:
        # s_i·Q = (s_iQ)·s_i − (Q − s_iQ)/(y_i − y_{i+1})
        eps, w = m
        swapped = list(eps)
        swapped[i - 1], swapped[i] = eps[i], eps[i - 1]
        out = {(tuple(swapped), Permutation.simple(i, self.r) * w): Fraction(1)}
        a, b = eps[i - 1], eps[i]
        if a != b:
            rest = list(eps)
            rest[i - 1] = rest[i] = 0
            out[(tuple(rest), w)] = Fraction(b - a)
        return out

    def _y(self, i: int, m: YMonomial) -> dict[YMonomial, Fraction]:
        eps, w = m
        if not eps[i - 1]:
            bumped = list(eps)
            bumped[i - 1] = 1
            return {(tuple(bumped), w): Fraction(1)}
        if i == 1:
            # y₁² = (u₁ + u₂)y₁ − u₁u₂
            lower = (0, *eps[1:])
            return _acc({m: self.u1 + self.u2}, {(lower, w): -self.u1 * self.u2})
        hit = self._memo_y.get((i, m))
        if hit is None:
            # y_i = s_{i−1}·y_{i−1}·s_{i−1} + s_{i−1}
            first = self._s(i - 1, m)
            hit = self._lift_s(i - 1, self._lift_y(i - 1, first))
            _acc(hit, first)
            self._memo_y[(i, m)] = hit
        return hit

    # --- cellular structure -----------------------------------------------------------------

    def cell_generator(self, kind: str, lam: Bipartition) -> HeckeElement:
        """𝔵_λ, 𝔶_λ, 𝔵̄_λ or 𝔶̄_λ for S1..S4."""
        if kind not in KINDS:
            raise ParameterError(f"unknown cellular basis {kind!r}; expected one of {KINDS}")
        if lam.size != self.r:
            raise ParameterError(f"{lam} is not a bipartition of {self.r}")
        a = lam.first.size
        pi = self.pi(a, self.u2 if kind in ("S1", "S3") else self.u1)
        x1, y1 = young_elements(lam.first.parts, self.r, 0)
        x2, y2 = young_elements(lam.second.parts, self.r, a)
        sym = x1 * y2 if kind in ("S1", "S2") else y1 * x2
        return pi * self.group(sym)

    def cellular(self, kind: str) -> CellularStructure:
        hit = self._cellular.get(kind)
        if hit is None:
            hit = self._cellular[kind] = CellularStructure(self, kind)
        return hit


class HeckeElement:
    __slots__ = ("hecke", "terms")

    def __init__(self, hecke: HeckeAlgebra, terms: Mapping[YMonomial, Fraction | int] | None = None):
        self.hecke = hecke
        self.terms: dict[YMonomial, Fraction] = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    def __add__(self, other: HeckeElement) -> HeckeElement:
        return HeckeElement(self.hecke, _acc(dict(self.terms), other.terms))

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return HeckeElement(self.hecke, _acc(dict(self.terms), other.terms, -1))

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.hecke, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: HeckeElement | Fraction | int) -> HeckeElement:
        if isinstance(other, HeckeElement):
            return self.hecke.multiply(self, other)
        return HeckeElement(self.hecke, {m: c * Fraction(other) for m, c in self.terms.items()})

    def __rmul__(self, other: Fraction | int) -> HeckeElement:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.hecke.context == other.hecke.context and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def vector(self) -> dict[int, Fraction]:
        index = self.hecke.index
        return {index[m]: c for m, c in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (eps, w), c in sorted(self.terms.items(), key=lambda item: (item[0][1].images, item[0][0])):
            ys = " ".join(f"y{i}" for i, e in enumerate(eps, 1) if e)
            parts.append(f"({c})·{ys + ' ' if ys else ''}{w}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HeckeElement({self})"


# --- 𝓑_{2,r,0} adapter -------------------------------------------------------------------


def walled_parameters(u1: Fraction, u2: Fraction) -> Parameters:
    """𝐟 for 𝓑_{2,r,0}: its roots are −u₁, −u₂ because x₁ = −y₁. The ω seeds never enter at t = 0."""
    return Parameters.create(u=(-Fraction(u1), -Fraction(u2)), omega=(0, 0))


class WalledHeckeAdapter:
    """H_{2,r} ≅ 𝓑_{2,r,0}: y^ε·w ↦ (−1)^{|ε|} x^ε·w."""

    def __init__(self, hecke: HeckeAlgebra):
        self.hecke = hecke
        self.walled = WalledBrauerAlgebra(walled_parameters(hecke.u1, hecke.u2), hecke.r, 0)
        self._bar = Permutation.identity(0, barred=True)

    def to_walled(self, h: HeckeElement) -> AlgebraElement:
        terms = {}
        for (eps, w), c in h.terms.items():
            terms[Monomial(eps, diagrams.from_perms(w, self._bar), ())] = c * (-1) ** sum(eps)
        return self.walled.element(terms)

    def from_walled(self, a: AlgebraElement) -> HeckeElement:
        terms = {}
        for m, c in a.terms.items():
            top, _ = m.diagram.to_perms()
            terms[(m.alpha, Permutation(top.images))] = c * (-1) ** sum(m.alpha)
        return HeckeElement(self.hecke, terms)

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        return self.from_walled(self.walled.multiply(self.to_walled(a), self.to_walled(b)))


def hecke_multiply(a: HeckeElement, b: HeckeElement, *, via_walled: bool = False) -> HeckeElement:
    if via_walled:
        return WalledHeckeAdapter(a.hecke).multiply(a, b)
    return a * b


def delegation_report(hecke: HeckeAlgebra, pairs: Iterable[tuple[HeckeElement, HeckeElement]]) -> Report:
    adapter = WalledHeckeAdapter(hecke)
    report = Report(f"H(2,{hecke.r}) native vs walled product")
    total = bad = 0
    for a, b in pairs:
        total += 1
        if a * b != adapter.multiply(a, b):
            bad += 1
            if bad <= 5:
                report.add(False, "product", f"{a} * {b} disagrees")
    report.add(bad == 0, "agreement", f"{total - bad}/{total} products agree")
    return report


# --- Jucys–Murphy elements ---------------------------------------------------------------------


def jucys_murphy(r: int, i: int) -> GroupAlgebraElement:
    """L_i = Σ_{j<i} (j,i); L₁ = 0."""
    if not 1 <= i <= r:
        raise ParameterError(f"L{i} out of range for r={r}")
    return GroupAlgebraElement({Permutation.transposition(j, i, r): Fraction(1) for j in range(1, i)})


def x_prime(hecke: HeckeAlgebra, i: int) -> HeckeElement:
    """x′_i = x_i + L_i written in H_{2,r}, where x_i = −y_i."""
    return hecke.group(jucys_murphy(hecke.r, i)) - hecke.y(i)


# --- cellular bases ------------------------------------------------------------------------


@dataclass(frozen=True)
class CellDatum:
    kind: str
    lam: Bipartition
    s: BiTableau
    t: BiTableau

    def to_json(self) -> dict:
        return {"kind": self.kind, "lambda": self.lam.to_json(), "s": self.s.to_json(), "t": self.t.to_json()}


def cellular_basis(hecke: HeckeAlgebra, kind: str) -> list[tuple[CellDatum, HeckeElement]]:
    """{d(𝔰)⁻¹·(cell generator of λ)·d(𝔱)} over λ ∈ Λ₂⁺(r) and 𝔰, 𝔱 ∈ Std(λ)."""
    out = []
    for lam in enumerate_bipartitions(hecke.r):
        core = hecke.cell_generator(kind, lam)
        tabs = standard_tableaux(lam)
        perms = {t: tableau_perm(t) for t in tabs}
        for s in tabs:
            left = hecke.perm(perms[s].inverse()) * core
            for t in tabs:
                out.append((CellDatum(kind, lam, s, t), left * hecke.perm(perms[t])))
    return out


@dataclass
class CellModule:
    kind: str
    lam: Bipartition
    tableaux: list[BiTableau]
    action: dict[str, list[list[Fraction]]]  # right action, row vectors
    gram: list[list[Fraction]]

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    @property
    def gram_rank(self) -> int:
        rows = [{j: v for j, v in enumerate(row) if v} for row in self.gram]
        return linalg.rank(rows, self.dimension)

    @property
    def radical_dimension(self) -> int:
        return self.dimension - self.gram_rank

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lambda": self.lam.to_json(),
            "dimension": self.dimension,
            "gram_rank": self.gram_rank,
            "gram": [[str(v) for v in row] for row in self.gram],
        }


class CellularStructure:
    """One cellular basis with its transition matrix to the y^ε·w basis."""

    def __init__(self, hecke: HeckeAlgebra, kind: str):
        self.hecke = hecke
        self.kind = kind
        self.elements = cellular_basis(hecke, kind)
        self.position = {datum: i for i, (datum, _) in enumerate(self.elements)}
        self._rows = [e.vector() for _, e in self.elements]

    @property
    def size(self) -> int:
        return len(self.elements)

    def transition_rank(self) -> int:
        return linalg.rank(self._rows, len(self.hecke.basis))

    @cached_property
    def _inverse(self) -> list[list[Fraction]]:
        n = len(self.hecke.basis)
        if len(self._rows) != n or self.transition_rank() != n:
            raise ParameterError(f"{self.kind} is not a basis of H(2,{self.hecke.r})")
        dense = [[row.get(j, Fraction(0)) for j in range(n)] for row in self._rows]
        return linalg.inverse(dense)

    def expand(self, h: HeckeElement) -> dict[CellDatum, Fraction]:
        """Coefficients of h in this cellular basis."""
        inv = self._inverse
        coeffs: dict[int, Fraction] = {}
        for i, v in h.vector().items():
            for j, w in enumerate(inv[i]):
                if w:
                    coeffs[j] = coeffs.get(j, Fraction(0)) + v * w
        return {self.elements[j][0]: c for j, c in coeffs.items() if c}

    def filtration_violations(self) -> list[str]:
        """Cases where c_{st}·g leaves span{c_{su}} + (higher cells)."""
        bad = []
        gens = self.hecke.generators()
        for datum, elem in self.elements:
            for name, g in gens:
                for other in self.expand(elem * g):
                    if other.lam == datum.lam:
                        if other.s != datum.s:
                            bad.append(f"{datum.lam} s={datum.s.to_json()} * {name} reaches s={other.s.to_json()}")
                    elif not dominates_strictly(other.lam, datum.lam):
                        bad.append(f"{datum.lam} * {name} reaches {other.lam}")
        return bad

    def cell_module(self, lam: Bipartition) -> CellModule:
        tabs = list(standard_tableaux(lam))
        head = tabs[0]
        elem = {d.t: e for d, e in self.elements if d.lam == lam and d.s == head}
        col = {t: i for i, t in enumerate(tabs)}
        action: dict[str, list[list[Fraction]]] = {}
        for name, g in self.hecke.generators():
            matrix = [[Fraction(0)] * len(tabs) for _ in tabs]
            for t in tabs:
                for other, c in self.expand(elem[t] * g).items():
                    if other.lam == lam and other.s == head:
                        matrix[col[t]][col[other.t]] = c
            action[name] = matrix
        # c_{head,t}·c_{u,head} ≡ φ(t,u)·c_{head,head} modulo higher cells
        by_pair = {(d.s, d.t): e for d, e in self.elements if d.lam == lam}
        target = CellDatum(self.kind, lam, head, head)
        gram = [
            [self.expand(by_pair[(head, t)] * by_pair[(u, head)]).get(target, Fraction(0)) for u in tabs]
            for t in tabs
        ]
        return CellModule(self.kind, lam, tabs, action, gram)


def cell_module(hecke: HeckeAlgebra, kind: str, lam: Bipartition) -> CellModule:
    return hecke.cellular(kind).cell_module(lam)


def kleshchev_count(r: int, u1: Fraction, u2: Fraction) -> int:
    """Kleshchev bipartitions of r, oriented so that the parameter difference lies in ℕ."""
    if Fraction(u2) - Fraction(u1) > 0 and (Fraction(u2) - Fraction(u1)).denominator == 1:
        u1, u2 = u2, u1
    return sum(1 for lam in enumerate_bipartitions(r) if kleshchev(lam, u1, u2))


def simple_count(r: int, u1: Fraction, u2: Fraction, kind: str = "S2") -> int:
    """Cells whose invariant form is non-zero: the number of simple H_{2,r}-modules."""
    structure = HeckeAlgebra(r, u1, u2).cellular(kind)
    return sum(1 for lam in enumerate_bipartitions(r) if structure.cell_module(lam).gram_rank > 0)


# --- vanishing and Specht-type realizations ------------------------------------------------------


def _span_rank(elements: Sequence[HeckeElement], n: int) -> int:
    return linalg.rank([e.vector() for e in elements], n)


def vanishing_checks(r: int, a: int, b: int, u1: Fraction, u2: Fraction) -> Report:
    """π_a(u₂)·H·π_b(u₁): zero when a+b > r; spanned by π_a(u₂)w_aπ_{r−a}(u₁)·ℂ𝔖_{r−a,a} when a+b = r."""
    hecke = HeckeAlgebra(r, u1, u2)
    report = Report(f"pi_{a}(u2) H pi_{b}(u1), r={r}")
    left, right = hecke.pi(a, hecke.u2), hecke.pi(b, hecke.u1)
    if a == 0 or b == 0:
        report.add(not (left * right).is_zero(), "trivial", "π_0 = 1, the product is non-zero")
        return report
    products = [left * hecke.element({m: 1}) * right for m in hecke.basis]
    n = len(hecke.basis)
    span = _span_rank(products, n)
    report.data = {"r": r, "a": a, "b": b, "span": span}
    if a + b > r:
        report.add(span == 0, "vanishing", f"span dimension {span} (a+b > r)")
    elif a + b == r:
        core = left * hecke.perm(w_a_perm(r, a)) * right
        spanning = [core * hecke.perm(w) for w in young_subgroup((r - a, a), r)]
        small = _span_rank(spanning, n)
        joint = _span_rank([*products, *spanning], n)
        report.add(
            span == small == joint,
            "span",
            f"dim π_a H π_(r-a) = {span}, dim π_a w_a π_(r-a) C S_(r-a,a) = {small}",
        )
    else:
        report.add(True, "span", f"span dimension {span} (a+b < r, no constraint)")
    return report


def xy_vanishing(hecke: HeckeAlgebra, lam: Bipartition, mu: Bipartition) -> bool:
    """Whether 𝔵_λ·h·𝔶_{μ′} = 0 for every basis monomial h."""
    left = hecke.cell_generator("S1", lam)
    right = hecke.cell_generator("S2", mu.dual())
    return all((left * hecke.element({m: 1}) * right).is_zero() for m in hecke.basis)


@dataclass
class SpechtRealization:
    lam: Bipartition
    generator: HeckeElement
    ideal_dimension: int
    basis_rank: int
    expected: int
    extra: dict = field(default_factory=dict)


def specht_realization(hecke: HeckeAlgebra, lam: Bipartition) -> SpechtRealization:
    """z = 𝔵_λ·w_λ·𝔶_{λ′}: dim zH and the rank of {z·d(𝔱) : 𝔱 ∈ Std(λ′)}."""
    dual = lam.dual()
    z = hecke.cell_generator("S1", lam) * hecke.perm(w_lambda(lam)) * hecke.cell_generator("S2", dual)
    n = len(hecke.basis)
    ideal = _span_rank([z * hecke.element({m: 1}) for m in hecke.basis], n)
    tabs = standard_tableaux(dual)
    spanning = _span_rank([z * hecke.perm(tableau_perm(t)) for t in tabs], n)
    return SpechtRealization(lam, z, ideal, spanning, len(tabs))


def two_sided_span(hecke: HeckeAlgebra, lam: Bipartition) -> int:
    """dim 𝔵_λ·H·𝔶_{λ′} (one when non-zero)."""
    left = hecke.cell_generator("S1", lam)
    right = hecke.cell_generator("S2", lam.dual())
    return _span_rank([left * hecke.element({m: 1}) * right for m in hecke.basis], len(hecke.basis))


def hecke_report(r: int, u1: Fraction, u2: Fraction, *, samples: int = 20, seed: int = 0) -> Report:
    """Basis sizes, filtration checks, cell dimensions and Gram ranks, product agreement."""
    hecke = HeckeAlgebra(r, u1, u2)
    report = Report(f"H(2,{r}) u=({u1},{u2})")
    n = len(hecke.basis)
    cells = {}
    for kind in KINDS:
        structure = hecke.cellular(kind)
        report.add(
            structure.size == n and structure.transition_rank() == n,
            f"{kind} basis",
            f"{structure.size} elements, transition rank {structure.transition_rank()} of {n}",
        )
    s2 = hecke.cellular("S2")
    violations = s2.filtration_violations()
    report.add(not violations, "S2 filtration", "closed under right generators" if not violations else violations[0])
    for lam in enumerate_bipartitions(r):
        module = s2.cell_module(lam)
        cells[str(lam)] = {"dim": module.dimension, "gram_rank": module.gram_rank}
    simples = sum(1 for c in cells.values() if c["gram_rank"])
    klesh = kleshchev_count(r, hecke.u1, hecke.u2)
    report.add(simples == klesh, "simple count", f"{simples} non-zero forms, {klesh} Kleshchev bipartitions")
    for a in range(1, r + 1):
        for b in range(r - a, r + 1):
            if b >= 1:
                report.extend(vanishing_checks(r, a, b, u1, u2), prefix=f"pi a={a} b={b}: ")
    rng = random.Random(seed)
    basis = hecke.basis
    pairs = [
        (hecke.element({rng.choice(basis): 1}), hecke.element({rng.choice(basis): 1})) for _ in range(samples)
    ]
    report.extend(delegation_report(hecke, pairs), prefix="walled: ")
    report.data = {"r": r, "u": [str(hecke.u1), str(hecke.u2)], "dimension": n, "cells": cells}
    return report
