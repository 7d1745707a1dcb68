"""The weakly cellular basis of 𝓑_{2,r,t}, its cell modules and their invariant forms.

A basis element is C_{(𝔰,d,κ_d)(𝔱,c,κ_c)} = x^{κ_d}·d⁻¹·𝔢^f·𝔫_{𝔰𝔱}·c·x^{κ_c}. The middle factor
𝔫_{𝔰𝔱} is an S2 element of H_{2,r−f} on the first r−f strands (to the left) times an S4
element of H_{2,t−f} on the first t−f barred strands, pushed in with y = −x (resp. −x̄) and
the parameters negated. Expansions are exact: every product is rewritten in regular
monomials and solved against the span of the cells at or above the index in question.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from cyclobrauer import diagrams, linalg
from cyclobrauer.algebra import AlgebraElement, WalledBrauerAlgebra
from cyclobrauer.combinatorics import (
    Bipartition,
    BiTableau,
    CosetDatum,
    Permutation,
    coset_reps,
    dominance_leq,
    enumerate_bipartitions,
    standard_tableaux,
)
from cyclobrauer.diagrams import Generator
from cyclobrauer.errors import ParameterError, VerificationError
from cyclobrauer.hecke import HeckeAlgebra
from cyclobrauer.params import Parameters
from cyclobrauer.report import Report

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CellIndex:
    f: int
    mu: Bipartition
    nu: Bipartition

    def to_json(self) -> dict:
        return {"f": self.f, "mu": self.mu.to_json(), "nu": self.nu.to_json()}

    def __str__(self) -> str:
        return f"({self.f},{self.mu},{self.nu})"


def index_leq(a: CellIndex, b: CellIndex) -> bool:
    """a ⊴ b: a smaller f, or the same f and componentwise dominance."""
    if a.f != b.f:
        return a.f < b.f
    return dominance_leq(a.mu, b.mu) and dominance_leq(a.nu, b.nu)


def index_dominates_strictly(a: CellIndex, b: CellIndex) -> bool:
    return a != b and index_leq(b, a)


def lambda_poset(r: int, t: int) -> list[CellIndex]:
    """Λ_{2,r,t}, f descending, each component dominant-first."""
    if r < 0 or t < 0:
        raise ParameterError(f"r and t must be non-negative, got ({r},{t})")
    return [
        CellIndex(f, mu, nu)
        for f in range(min(r, t), -1, -1)
        for mu in enumerate_bipartitions(r - f)
        for nu in enumerate_bipartitions(t - f)
    ]


@dataclass(frozen=True, slots=True)
class CellLabel:
    """(𝔱, c, κ_c): a tableau pair in Std(μ) × Std(ν) and a coset element with its κ."""

    first: BiTableau
    second: BiTableau
    coset: CosetDatum

    def to_json(self) -> dict:
        return {"t1": self.first.to_json(), "t2": self.second.to_json(), "coset": self.coset.to_json()}


def delta(index: CellIndex, r: int, t: int) -> list[CellLabel]:
    cosets = coset_reps(r, t, index.f, "tail")
    return [
        CellLabel(a, b, c)
        for a in standard_tableaux(index.mu)
        for b in standard_tableaux(index.nu)
        for c in cosets
    ]


@dataclass(frozen=True)
class CellularElement:
    index: CellIndex
    left: CellLabel
    right: CellLabel
    element: AlgebraElement

    @property
    def key(self) -> tuple[CellIndex, CellLabel, CellLabel]:
        return (self.index, self.left, self.right)


@dataclass
class WalledCellModule:
    index: CellIndex
    labels: list[CellLabel]
    action: dict[str, list[list[Fraction]]]  # right action, row vectors
    gram: list[list[Fraction]]

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def gram_rank(self) -> int:
        return linalg.rank([{j: v for j, v in enumerate(row) if v} for row in self.gram], self.dimension)

    @property
    def radical_dimension(self) -> int:
        return self.dimension - self.gram_rank

    def to_json(self) -> dict:
        return {
            "index": self.index.to_json(),
            "dimension": self.dimension,
            "labels": [label.to_json() for label in self.labels],
            "action": {name: [[str(v) for v in row] for row in m] for name, m in self.action.items()},
            "gram": [[str(v) for v in row] for row in self.gram],
            "gram_rank": self.gram_rank,
        }


@dataclass(frozen=True)
class Simplicity:
    index: CellIndex
    rank: int
    radical_dimension: int
    nonzero: bool
    predicted: bool

    @property
    def consistent(self) -> bool:
        return self.nonzero == self.predicted

    def to_json(self) -> dict:
        return {
            "index": self.index.to_json(),
            "rank": self.rank,
            "radical": self.radical_dimension,
            "nonzero": self.nonzero,
            "predicted": self.predicted,
        }


class WalledCellularBasis:
    """𝒞 for one level-two cyclotomic walled Brauer algebra."""

    def __init__(self, algebra: WalledBrauerAlgebra):
        if algebra.k != 2 or not algebra.cyclotomic:
            raise ParameterError("the cellular basis is built for the level-two cyclotomic algebra only")
        self.algebra = algebra
        self.r = algebra.r
        self.t = algebra.t
        self.poset = lambda_poset(self.r, self.t)
        self._hecke: dict[tuple[int, bool], HeckeAlgebra] = {}
        self._sides: dict[tuple[int, bool], dict[tuple[BiTableau, BiTableau], AlgebraElement]] = {}
        self._spans: dict[CellIndex, tuple[list[CellularElement], linalg.RowSpan]] = {}
        self._elements: dict[CellIndex, list[CellularElement]] = {}

    @cached_property
    def _position(self) -> dict:
        return {m: i for i, m in enumerate(self.algebra.basis())}

    def vector(self, a: AlgebraElement) -> dict[int, Fraction]:
        return {self._position[m]: c for m, c in a.terms.items()}

    # --- Hecke pieces ---------------------------------------------------------------------

    def hecke_side(self, n: int, barred: bool) -> HeckeAlgebra:
        """H_{2,n} with the negated 𝐟 roots (r-side) or 𝐠 roots (t-side)."""
        hit = self._hecke.get((n, barred))
        if hit is None:
            roots = self._roots(barred)
            hit = self._hecke[(n, barred)] = HeckeAlgebra(n, -roots[0], -roots[1])
        return hit

    def _roots(self, barred: bool) -> tuple[Fraction, ...]:
        params = self.algebra.params
        if not barred:
            return params.u
        if params.ubar is None:
            raise ParameterError(f"𝐠 has irrational roots (coefficients {[str(c) for c in params.g_coeffs]})")
        return params.ubar

    def _side(self, n: int, barred: bool) -> dict[tuple[BiTableau, BiTableau], AlgebraElement]:
        hit = self._sides.get((n, barred))
        if hit is None:
            if n == 0:
                hit = {(BiTableau(), BiTableau()): self.algebra.one()}
            else:
                kind = "S4" if barred else "S2"
                structure = self.hecke_side(n, barred).cellular(kind)
                hit = {(d.s, d.t): self.push(h.terms, n, barred) for d, h in structure.elements}
            self._sides[(n, barred)] = hit
        return hit

    def push(self, terms: dict, n: int, barred: bool) -> AlgebraElement:
        """y^ε·w ↦ (−1)^{|ε|}·x^ε·w on the first n strands (barred strands when `barred`)."""
        alg = self.algebra
        out = alg.zero()
        for (eps, w), c in terms.items():
            coeff = c * (-1) ** sum(eps)
            if barred:
                bar = Permutation(w.images + tuple(range(n + 1, self.t + 1)), barred=True)
                term = alg.monomial(beta=eps + (0,) * (self.t - n)) * alg.permutation(bar=bar)
            else:
                top = Permutation(w.images + tuple(range(n + 1, self.r + 1)))
                diagram = diagrams.from_perms(top, Permutation.identity(self.t, barred=True))
                term = alg.monomial(alpha=eps + (0,) * (self.r - n), diagram=diagram)
            out = out + term * coeff
        return out

    # --- basis ------------------------------------------------------------------------------

    def element(self, index: CellIndex, left: CellLabel, right: CellLabel) -> AlgebraElement:
        alg = self.algebra
        f = index.f
        middle = self._side(self.r - f, False)[(left.first, right.first)]
        middle = middle * self._side(self.t - f, True)[(left.second, right.second)]
        d, c = left.coset, right.coset
        out = alg.monomial(alpha=d.kappa) * alg.normalize(list(reversed(d.word)))
        out = out * alg.normalize(diagrams.frak_e_word(self.r, self.t, f)) * middle
        return out * alg.normalize(list(c.word)) * alg.monomial(alpha=c.kappa)

    def cell(self, index: CellIndex) -> list[CellularElement]:
        hit = self._elements.get(index)
        if hit is None:
            labels = delta(index, self.r, self.t)
            hit = [CellularElement(index, a, b, self.element(index, a, b)) for a in labels for b in labels]
            self._elements[index] = hit
        return hit

    @property
    def elements(self) -> list[CellularElement]:
        return [e for index in self.poset for e in self.cell(index)]

    def transition_rank(self) -> int:
        return linalg.rank([self.vector(e.element) for e in self.elements], self.algebra.dimension)

    # --- expansions -------------------------------------------------------------------------

    def _span(self, index: CellIndex) -> tuple[list[CellularElement], linalg.RowSpan]:
        hit = self._spans.get(index)
        if hit is None:
            members = [e for other in self.poset if index_leq(index, other) for e in self.cell(other)]
            try:
                span = linalg.RowSpan([self.vector(e.element) for e in members], self.algebra.dimension)
            except ValueError as exc:
                raise VerificationError(f"cells at or above {index} are linearly dependent") from exc
            hit = self._spans[index] = (members, span)
        return hit

    def expand(self, a: AlgebraElement, above: CellIndex) -> dict[tuple, Fraction] | None:
        """Coefficients of a over the cells ⊵ above, or None when a lies outside that span."""
        members, span = self._span(above)
        coords = span.coordinates(self.vector(a))
        if coords is None:
            return None
        return {members[i].key: c for i, c in coords.items()}

    def generators(self) -> list[tuple[str, AlgebraElement]]:
        alg = self.algebra
        gens: list[Generator] = [("s", i) for i in range(1, self.r)] + [("sbar", j) for j in range(1, self.t)]
        if self.r:
            gens.append(("x", 1))
        if self.t:
            gens.append(("xbar", 1))
        if self.r and self.t:
            gens.append(("e", 1))
        return [(f"{kind}{i}", alg.normalize([(kind, i)])) for kind, i in gens]

    def filtration_violations(self, sample: Iterable[CellularElement] | None = None) -> list[str]:
        """C·g must stay in the cells ⊵ its own, with the left label kept inside its own cell."""
        bad = []
        gens = self.generators()
        for c in self.elements if sample is None else sample:
            for name, g in gens:
                coeffs = self.expand(c.element * g, c.index)
                if coeffs is None:
                    bad.append(f"{c.index} * {name} leaves the ideal above {c.index}")
                    continue
                for index, left, _ in coeffs:
                    if index == c.index and left != c.left:
                        bad.append(f"{c.index} * {name} changes the left label")
        return bad

    def sigma_violations(self, sample: Iterable[CellularElement] | None = None) -> list[str]:
        bad = []
        for c in self.elements if sample is None else sample:
            if self.expand(self.algebra.sigma(c.element), c.index) is None:
                bad.append(f"sigma moves a cell element of {c.index} below its layer")
        return bad

    # --- modules and forms ----------------------------------------------------------------------

    def gram(self, index: CellIndex, x: CellLabel | None = None, y: CellLabel | None = None) -> list[list[Fraction]]:
        """φ(a,b) from C_{x a}·C_{b y} ≡ φ(a,b)·C_{x y} modulo higher cells."""
        labels = delta(index, self.r, self.t)
        x = labels[0] if x is None else x
        y = labels[0] if y is None else y
        lefts = {a: self.element(index, x, a) for a in labels}
        rights = {b: self.element(index, b, y) for b in labels}
        target = (index, x, y)
        rows = []
        for a in labels:
            row = []
            for b in labels:
                coeffs = self.expand(lefts[a] * rights[b], index)
                if coeffs is None:
                    raise VerificationError(f"a product of two cells of {index} left their ideal")
                row.append(coeffs.get(target, Fraction(0)))
            rows.append(row)
        return rows

    def cell_module(self, index: CellIndex) -> WalledCellModule:
        labels = delta(index, self.r, self.t)
        head = labels[0]
        col = {b: i for i, b in enumerate(labels)}
        rows = {b: self.element(index, head, b) for b in labels}
        action = {}
        for name, g in self.generators():
            matrix = [[Fraction(0)] * len(labels) for _ in labels]
            for b in labels:
                coeffs = self.expand(rows[b] * g, index)
                if coeffs is None:
                    raise VerificationError(f"C * {name} left the ideal above {index}")
                for (other, left, right), c in coeffs.items():
                    if other == index and left == head:
                        matrix[col[b]][col[right]] = c
            action[name] = matrix
        log.debug("cell module %s: dimension %d", index, len(labels))
        return WalledCellModule(index, labels, action, self.gram(index))

    def hecke_nonzero(self, lam: Bipartition, barred: bool) -> bool:
        """D^μ ≠ 0 (S2, r-side) or D̄^ν ≠ 0 (S4, t-side)."""
        if lam.size == 0:
            return True
        structure = self.hecke_side(lam.size, barred).cellular("S4" if barred else "S2")
        return structure.cell_module(lam).gram_rank > 0

    def simplicity(self, index: CellIndex) -> Simplicity:
        dim = len(delta(index, self.r, self.t))
        module_rank = linalg.rank([{j: v for j, v in enumerate(row) if v} for row in self.gram(index)], dim)
        alg = self.algebra
        degenerate = self.r == self.t and index.f == self.r and alg.omega(0) == 0 and alg.omega(1) == 0
        predicted = not degenerate and self.hecke_nonzero(index.mu, False) and self.hecke_nonzero(index.nu, True)
        return Simplicity(index, module_rank, dim - module_rank, module_rank > 0, predicted)


# --- module-level entry points ---------------------------------------------------------------


def cellular_basis_B(r: int, t: int, params: Parameters) -> list[CellularElement]:
    return WalledCellularBasis(WalledBrauerAlgebra(params, r, t)).elements


def cell_module_C(index: CellIndex, params: Parameters, r: int, t: int) -> WalledCellModule:
    return WalledCellularBasis(WalledBrauerAlgebra(params, r, t)).cell_module(index)


def gram_and_simplicity(index: CellIndex, params: Parameters, r: int, t: int) -> Simplicity:
    return WalledCellularBasis(WalledBrauerAlgebra(params, r, t)).simplicity(index)


def cellular_report(
    params: Parameters,
    r: int,
    t: int,
    *,
    seed: int = 0,
    samples: int = 24,
    exhaustive_limit: int = 64,
) -> Report:
    """Basis size and independence, Σ dim² = rank, filtration and σ checks, simplicity per cell."""
    algebra = WalledBrauerAlgebra(params, r, t)
    cellular = WalledCellularBasis(algebra)
    report = Report(f"cellular B(2,{r},{t})")
    elements = cellular.elements
    n = algebra.dimension
    report.add(len(elements) == n, "basis size", f"{len(elements)} cellular elements, rank {n}")
    full = cellular.transition_rank()
    report.add(full == n, "transition", f"transition matrix rank {full} of {n}")
    if full != n:
        return report

    dims = {index: len(delta(index, r, t)) for index in cellular.poset}
    total = sum(d * d for d in dims.values())
    report.add(total == n, "sum of squares", f"Σ dim² = {total}")

    if len(elements) <= exhaustive_limit:
        sample, how = elements, "exhaustive"
    else:
        sample, how = random.Random(seed).sample(elements, samples), f"{samples} sampled"
    bad = cellular.filtration_violations(sample)
    report.add(not bad, "filtration", f"{how}: " + ("ok" if not bad else bad[0]))
    bad = cellular.sigma_violations(sample)
    report.add(not bad, "sigma", f"{how}: " + ("ok" if not bad else bad[0]))

    cells = []
    for index in cellular.poset:
        s = cellular.simplicity(index)
        cells.append({"index": str(index), "dim": dims[index], "gram_rank": s.rank, "simple": s.nonzero})
        report.add(
            s.consistent,
            f"simple {index}",
            f"rank {s.rank}/{dims[index]}, criterion says {'non-zero' if s.predicted else 'zero'}",
        )
    report.data = {"r": r, "t": t, "params": params.to_json(), "cells": cells}
    return report
