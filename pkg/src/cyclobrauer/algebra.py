"""The affine and cyclotomic walled Brauer algebras in the regular-monomial basis.

An element is a rational combination of monomials x^α·D·x̄^β. Products are computed by left
multiplication with generators, one rewriting operator per generator kind:

    x_i    commutes with x^α; exponents reaching k are divided by 𝐟 on the Hecke side
    s_i    s_i·x^α = x^{s_iα}·s_i + ∂_i(x^α), then the diagram is composed
    s̄_j    commutes with x^α
    e₁     peels x_i off the front, using e₁x₁^a·D = ω_a·D when D caps 1 with 1̄
           and e₁x₁ = −e₁x̄₁ otherwise
    x̄₁     commutes past x_i up to e_{i,1} corrections, then is absorbed into D:
           either x̄₁·D = D·x̄′_j (1̄ runs down to j̄) or x̄₁·D = −x′_i·D (1̄ caps with i)

The x̄ exponents reaching k are divided by 𝐠 on the right. Every rule lowers the total
x-degree or hands off to an operator of lower rank, so the recursion terminates; the
e₁ and x̄₁ operators are memoized per monomial.
"""

from __future__ import annotations

import logging
import math
import random
import re
from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction
from functools import partial
from itertools import product
from pathlib import Path
from typing import NamedTuple

from cyclobrauer import diagrams
from cyclobrauer.cache import StructureCache
from cyclobrauer.combinatorics import Permutation
from cyclobrauer.diagrams import Generator, WalledDiagram
from cyclobrauer.errors import ParameterError
from cyclobrauer.params import Parameters
from cyclobrauer.report import Report

log = logging.getLogger(__name__)

Exponents = tuple[int, ...]

class Monomial(NamedTuple):
    """x^α · D · x̄^β."""

    alpha: Exponents
    diagram: WalledDiagram
    beta: Exponents

    @property
    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def sort_key(self) -> tuple:
        return (self.diagram.f, self.diagram.partner, self.alpha, self.beta)

    def key(self) -> str:
        return f"{_ints(self.alpha)}|{_ints(self.diagram.partner)}|{_ints(self.beta)}"

    @classmethod
    def from_key(cls, key: str, r: int, t: int) -> Monomial:
        alpha, partner, beta = (_parse_ints(part) for part in key.split("|"))
        return cls(alpha, WalledDiagram(r, t, partner), beta)

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "diagram": self.diagram.to_json()}

    def __str__(self) -> str:
        xs = [f"x{i}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(self.alpha, 1) if a]
        xbs = [f"xb{j}" + (f"^{b}" if b > 1 else "") for j, b in enumerate(self.beta, 1) if b]
        return " ".join([*xs, f"[{self.diagram}]", *xbs])


Terms = dict[Monomial, Fraction]


def _ints(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(",")) if text else ()


def _acc(out: dict, terms: Mapping, scale: Fraction | int = 1) -> dict:
    """out += scale·terms, dropping zeros."""
    for m, c in terms.items():
        v = out.get(m, 0) + c * scale
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _swap(exps: Exponents, p: int) -> Exponents:
    e = list(exps)
    e[p], e[p + 1] = e[p + 1], e[p]
    return tuple(e)


def _bump(exps: Exponents, i: int, by: int) -> Exponents:
    e = list(exps)
    e[i - 1] += by
    return tuple(e)


def divided_difference(exps: Exponents, p: int) -> dict[Exponents, int]:
    """∂(x^exps) = (P − sP)/(x_p − x_{p+1}) on the 0-based positions p, p+1."""
    a, b = exps[p], exps[p + 1]
    if a == b:
        return {}
    lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
    out: dict[Exponents, int] = {}
    for j in range(hi - lo):
        e = list(exps)
        e[p], e[p + 1] = lo + j, hi - 1 - j
        out[tuple(e)] = sign
    return out


class _HeckeReducer:
    """x^γ as Σ c·x^ρ·w with every ρ_i < k, in a degenerate cyclotomic Hecke algebra.

    `coeffs` are a₁..a_k of the cyclotomic polynomial (index 0 unused). Strand 1 is divided
    directly; strand i ≥ 2 is conjugated to strand i−1 with s = s_{i−1}:
    x^γ = s·(x^{sγ})·s − ∂(x^{sγ})·s.
    """

    def __init__(self, k: int, coeffs: Sequence[Fraction], n: int, barred: bool):
        self.k = k
        self.coeffs = list(coeffs)
        self.n = n
        self.barred = barred
        self._one = Permutation.identity(n, barred)
        self._memo: dict[Exponents, dict[tuple[Exponents, Permutation], Fraction]] = {}

    def reduce(self, gamma: Exponents) -> dict[tuple[Exponents, Permutation], Fraction]:
        hit = self._memo.get(gamma)
        if hit is not None:
            return hit
        k = self.k
        big = next((i for i, g in enumerate(gamma) if g >= k), None)
        out: dict[tuple[Exponents, Permutation], Fraction] = {}
        if big is None:
            out[(gamma, self._one)] = Fraction(1)
        elif big == 0:
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    _acc(out, self.reduce((gamma[0] - j, *gamma[1:])), -self.coeffs[j])
        else:
            s = Permutation.simple(big, self.n, self.barred)
            swapped = _swap(gamma, big - 1)
            for (rho, w), c in self.reduce(swapped).items():
                _acc(out, {(_swap(rho, big - 1), s * w * s): c})
                for rho2, c2 in divided_difference(rho, big - 1).items():
                    _acc(out, {(rho2, w * s): c * c2})
            for rho3, c3 in divided_difference(swapped, big - 1).items():
                for (rho4, w4), c4 in self.reduce(rho3).items():
                    _acc(out, {(rho4, w4 * s): -c3 * c4})
        self._memo[gamma] = out
        return out


def rank(k: int, r: int, t: int) -> int:
    """k^{r+t}·(r+t)!, the rank of the level-k algebra."""
    return k ** (r + t) * math.factorial(r + t)


def basis(k: int, r: int, t: int) -> list[Monomial]:
    """The regular monomials, diagram-major, then α, then β (lexicographic)."""
    if k < 1 or r < 0 or t < 0:
        raise ParameterError(f"no basis for (k,r,t)=({k},{r},{t})")
    exps_r = list(product(range(k), repeat=r))
    exps_t = list(product(range(k), repeat=t))
    return [Monomial(a, d, b) for d in diagrams.all_diagrams(r, t) for a in exps_r for b in exps_t]


def flip(d: WalledDiagram) -> WalledDiagram:
    """The diagram turned upside down (σ on diagrams)."""
    n = d.size

    def fl(v: int) -> int:
        return v + n if v < n else v - n

    return WalledDiagram(d.r, d.t, tuple(fl(d.partner[fl(v)]) for v in range(2 * n)))


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_TOKEN = re.compile(r"^(e|s|sb|sbar|x|xb|xbar)(\d+)(?:\^(\d+))?$")
_KIND = {"e": "e", "s": "s", "sb": "sbar", "sbar": "sbar", "x": "x", "xb": "xbar", "xbar": "xbar"}


def parse_word(text: str) -> tuple[Fraction, list[Generator]]:
    """`"2 e1 x1^2 sb1"` → (2, [("e",1), ("x",1), ("x",1), ("sbar",1)]). Separators: space, `*`, `·`."""
    coeff = Fraction(1)
    word: list[Generator] = []
    for n, tok in enumerate(text.replace("*", " ").replace("·", " ").split()):
        if n == 0 and _RATIONAL.match(tok):
            coeff = Fraction(tok)
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ParameterError(f"cannot parse generator {tok!r}")
        word.extend([(_KIND[m[1]], int(m[2]))] * int(m[3] or 1))
    return coeff, word


class WalledBrauerAlgebra:
    """𝓑_{k,r,t} (or the affine algebra when `cyclotomic=False`) over the given parameters."""

    def __init__(
        self,
        params: Parameters,
        r: int,
        t: int,
        *,
        cyclotomic: bool = True,
        cache_dir: Path | str | None = None,
    ):
        if r < 0 or t < 0:
            raise ParameterError(f"r and t must be non-negative, got ({r},{t})")
        self.params = params
        self.k = params.k
        self.r = r
        self.t = t
        self.cyclotomic = cyclotomic
        self._left = _HeckeReducer(self.k, params.a, r, barred=False)
        self._right = _HeckeReducer(self.k, params.b, t, barred=True) if t and cyclotomic else None
        self._identity = diagrams.identity(r, t)
        self._omega: list[Fraction] = list(params.omega_sequence(self.k))
        self._compose: dict[tuple[Generator, WalledDiagram], tuple[int, WalledDiagram]] = {}
        self._perm_diagrams: dict[Permutation, WalledDiagram] = {}
        self._words: dict[WalledDiagram, list[Generator]] = {}
        self._transpositions: dict[tuple[int, int], list[Generator]] = {}
        self._memo_e: dict[Monomial, Terms] = {}
        self._memo_xbar: dict[tuple[int, Monomial], Terms] = {}
        self._products: dict[tuple[Monomial, Monomial], Terms] = {}
        self._store: StructureCache | None = None
        if cache_dir is not None and cyclotomic:
            self._store = StructureCache(cache_dir, self.k, r, t, params.digest)
            self._store.load()

    @property
    def context(self) -> tuple:
        return (self.k, self.r, self.t, self.params.digest, self.cyclotomic)

    def omega(self, a: int) -> Fraction:
        if a >= len(self._omega):
            self._omega = self.params.omega_sequence(a)
        return self._omega[a]

    # --- elements ------------------------------------------------------------------------

    def element(self, terms: Mapping[Monomial, Fraction | int]) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.monomial()

    def monomial(
        self,
        alpha: Sequence[int] | None = None,
        diagram: WalledDiagram | None = None,
        beta: Sequence[int] | None = None,
        coeff: Fraction | int = 1,
    ) -> AlgebraElement:
        m = Monomial(
            tuple(alpha) if alpha is not None else (0,) * self.r,
            diagram if diagram is not None else self._identity,
            tuple(beta) if beta is not None else (0,) * self.t,
        )
        self._check_monomial(m)
        return AlgebraElement(self, {m: Fraction(coeff)})

    def permutation(self, top: Permutation | None = None, bar: Permutation | None = None) -> AlgebraElement:
        top = Permutation.identity(self.r) if top is None else top
        bar = Permutation.identity(self.t, barred=True) if bar is None else bar
        return self.monomial(diagram=diagrams.from_perms(top, bar))

    def basis(self) -> list[Monomial]:
        return basis(self.k, self.r, self.t)

    @property
    def dimension(self) -> int:
        return rank(self.k, self.r, self.t)

    def word(self, text: str) -> AlgebraElement:
        """normalize() of a textual word such as `"e1 x1^2 e1"`."""
        coeff, word = parse_word(text)
        return self.normalize(word, coeff)

    def x_prime(self, i: int) -> AlgebraElement:
        """x′_i = x_i + Σ_{j<i} (j,i)."""
        out = self.normalize([("x", i)])
        for j in range(1, i):
            out = out + self.permutation(top=Permutation.transposition(j, i, self.r))
        return out

    def xbar_prime(self, j: int) -> AlgebraElement:
        """x̄′_j = x̄_j + Σ_{l<j} (l̄,j̄)."""
        out = self.normalize([("xbar", j)])
        for ell in range(1, j):
            out = out + self.permutation(bar=Permutation.transposition(ell, j, self.t, barred=True))
        return out

    def polynomial(self, coeffs: Sequence[Fraction], x: AlgebraElement) -> AlgebraElement:
        """Σ coeffs[i]·x^i (ascending coefficients), by Horner."""
        out = self.zero()
        for c in reversed(coeffs):
            out = out * x + self.one() * c
        return out

    def sample(self, rng: random.Random, size: int = 3) -> AlgebraElement:
        """A random element supported on `size` basis monomials with small integer coefficients."""
        monomials = self.basis()
        picks = rng.sample(monomials, min(size, len(monomials)))
        return self.element({m: Fraction(rng.choice([-3, -2, -1, 1, 2, 3])) for m in picks})

    def _check_monomial(self, m: Monomial) -> None:
        if len(m.alpha) != self.r or len(m.beta) != self.t or (m.diagram.r, m.diagram.t) != (self.r, self.t):
            raise ParameterError(f"monomial {m} does not live on ({self.r},{self.t}) strands")
        if self.cyclotomic and (max(m.alpha, default=0) >= self.k or max(m.beta, default=0) >= self.k):
            raise ParameterError(f"monomial {m} breaks the cyclotomic bound k={self.k}")

    def _check_generator(self, g: Generator) -> None:
        kind, i = g
        bounds = {"e": (1, 1), "s": (1, self.r - 1), "sbar": (1, self.t - 1), "x": (1, self.r), "xbar": (1, self.t)}
        if kind not in bounds:
            raise ParameterError(f"unknown generator kind {kind!r}")
        lo, hi = bounds[kind]
        if kind == "e" and (self.r < 1 or self.t < 1):
            hi = 0
        if not lo <= i <= hi:
            raise ParameterError(f"generator {kind}{i} out of range for (r,t)=({self.r},{self.t})")

    # --- public products ------------------------------------------------------------------

    def normalize(self, word: Sequence[Generator], coeff: Fraction | int = 1) -> AlgebraElement:
        """The regular-monomial expansion of coeff·g₁g₂⋯g_n."""
        for g in word:
            self._check_generator(g)
        start: Terms = {Monomial((0,) * self.r, self._identity, (0,) * self.t): Fraction(coeff)}
        return AlgebraElement(self, self._apply_word(list(word), start))

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if a.algebra.context != self.context or b.algebra.context != self.context:
            raise ParameterError("cannot multiply elements of different algebras")
        out: Terms = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                _acc(out, self.product(ma, mb), ca * cb)
        return AlgebraElement(self, out)

    def product(self, a: Monomial, b: Monomial) -> Terms:
        """Structure constants of a·b (memoized, and persisted when a cache directory is set)."""
        hit = self._products.get((a, b))
        if hit is not None:
            return hit
        key = f"{a.key()}*{b.key()}"
        stored = self._store.get(key) if self._store is not None else None
        if stored is not None:
            hit = {Monomial.from_key(m, self.r, self.t): c for m, c in stored.items()}
        else:
            hit = self._monomial_times(a, {b: Fraction(1)})
            if self._store is not None:
                self._store.put(key, {m.key(): c for m, c in hit.items()})
        self._products[(a, b)] = hit
        return hit

    def sigma(self, a: AlgebraElement) -> AlgebraElement:
        """The anti-involution fixing every generator: x^α·D·x̄^β ↦ x̄^β·D*·x^α."""
        out: Terms = {}
        for m, c in a.terms.items():
            word: list[Generator] = [("xbar", j) for j, b in enumerate(m.beta, 1) for _ in range(b)]
            word += self._diagram_word(flip(m.diagram))
            word += [("x", i) for i, a_i in enumerate(m.alpha, 1) for _ in range(a_i)]
            _acc(out, self.normalize(word, c).terms)
        return AlgebraElement(self, out)

    def flush(self) -> Path | None:
        """Persist newly computed structure constants."""
        log.debug(
            "algebra (%d,%d,%d): %d products, %d e-memo, %d xbar-memo",
            self.k, self.r, self.t, len(self._products), len(self._memo_e), len(self._memo_xbar),
        )
        return self._store.save() if self._store is not None else None

    # --- rewriting operators ------------------------------------------------------------------

    def _lift(self, op: Callable[[Monomial], Mapping[Monomial, Fraction]], terms: Mapping[Monomial, Fraction]) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            _acc(out, op(m), c)
        return out

    def _op(self, g: Generator) -> Callable[[Monomial], Mapping[Monomial, Fraction]]:
        kind, i = g
        if kind == "x":
            return partial(self._x, i)
        if kind == "xbar":
            return partial(self._xbar, i)
        if kind == "s":
            return partial(self._s, i)
        if kind == "sbar":
            return partial(self._sbar, i)
        return self._e

    def _apply_word(self, word: Sequence[Generator], terms: Mapping[Monomial, Fraction]) -> Terms:
        """g₁⋯g_n · terms, applying g_n first."""
        out = dict(terms)
        for g in reversed(word):
            out = self._lift(self._op(g), out)
        return out

    def _monomial_times(self, a: Monomial, terms: Terms) -> Terms:
        out = dict(terms)
        for j, power in enumerate(a.beta, 1):
            for _ in range(power):
                out = self._lift(partial(self._xbar, j), out)
        out = self._apply_word(self._diagram_word(a.diagram), out)
        for i, power in enumerate(a.alpha, 1):
            for _ in range(power):
                out = self._lift(partial(self._x, i), out)
        return out

    def _diagram_word(self, d: WalledDiagram) -> list[Generator]:
        word = self._words.get(d)
        if word is None:
            word = self._words[d] = diagrams.diagram_word(d)
        return word

    def _transposition(self, i: int, j: int) -> list[Generator]:
        word = self._transpositions.get((i, j))
        if word is None:
            w = Permutation.transposition(i, j, self.r)
            word = self._transpositions[(i, j)] = [("s", x) for x in w.reduced_word()]
        return word

    def _concat(self, g: Generator, d: WalledDiagram) -> tuple[int, WalledDiagram]:
        hit = self._compose.get((g, d))
        if hit is None:
            hit = self._compose[(g, d)] = diagrams.diagram_concat(diagrams.generator(g, self.r, self.t), d)
        return hit

    def _perm_diagram(self, w: Permutation) -> WalledDiagram:
        hit = self._perm_diagrams.get(w)
        if hit is None:
            if w.barred:
                hit = diagrams.from_perms(Permutation.identity(self.r), w)
            else:
                hit = diagrams.from_perms(w, Permutation.identity(self.t, barred=True))
            self._perm_diagrams[w] = hit
        return hit

    def _attach_left(self, gamma: Exponents, d: WalledDiagram, beta: Exponents) -> Terms:
        """x^γ·D·x̄^β with γ divided by 𝐟 where needed."""
        if not self.cyclotomic or max(gamma, default=0) < self.k:
            return {Monomial(gamma, d, beta): Fraction(1)}
        out: Terms = {}
        for (rho, w), c in self._left.reduce(gamma).items():
            dd = d if w.is_identity() else diagrams.diagram_concat(self._perm_diagram(w), d)[1]
            _acc(out, {Monomial(rho, dd, beta): c})
        return out

    def _attach_right(self, alpha: Exponents, d: WalledDiagram, delta: Exponents) -> Terms:
        """x^α·D·x̄^δ with δ divided by 𝐠 where needed; x̄^δ = Σ c·w̄⁻¹·x̄^ρ."""
        if self._right is None or max(delta, default=0) < self.k:
            return {Monomial(alpha, d, delta): Fraction(1)}
        out: Terms = {}
        for (rho, w), c in self._right.reduce(delta).items():
            dd = d if w.is_identity() else diagrams.diagram_concat(d, self._perm_diagram(w.inverse()))[1]
            _acc(out, {Monomial(alpha, dd, rho): c})
        return out

    def _x(self, i: int, m: Monomial) -> Terms:
        return self._attach_left(_bump(m.alpha, i, 1), m.diagram, m.beta)

    def _s(self, i: int, m: Monomial) -> Terms:
        _, d = self._concat(("s", i), m.diagram)
        out: Terms = {Monomial(_swap(m.alpha, i - 1), d, m.beta): Fraction(1)}
        for rho, c in divided_difference(m.alpha, i - 1).items():
            _acc(out, {Monomial(rho, m.diagram, m.beta): Fraction(c)})
        return out

    def _sbar(self, j: int, m: Monomial) -> Terms:
        _, d = self._concat(("sbar", j), m.diagram)
        return {Monomial(m.alpha, d, m.beta): Fraction(1)}

    def _e(self, m: Monomial) -> Terms:
        hit = self._memo_e.get(m)
        if hit is not None:
            return hit
        alpha, d, beta = m
        if not any(alpha):
            circles, dd = self._concat(("e", 1), d)
            out: Terms = {Monomial(alpha, dd, beta): self.omega(0) ** circles}
        else:
            i = max(idx for idx, a in enumerate(alpha, 1) if a)
            rest = Monomial(_bump(alpha, i, -1), d, beta)
            if i >= 2:
                # e₁ commutes with x_i + L_i, so e₁x_i = x_i e₁ + (1,i)e₁ − e₁(1,i)
                inner = self._e(rest)
                swap = self._transposition(1, i)
                out = self._lift(partial(self._x, i), inner)
                _acc(out, self._apply_word(swap, inner))
                _acc(out, self._lift(self._e, self._apply_word(swap, {rest: Fraction(1)})), -1)
            elif d.partner[d.top(1)] == d.topbar(1):
                out = {Monomial((0,) * self.r, d, beta): self.omega(alpha[0])}
            else:
                out = {}
                _acc(out, self._lift(self._e, self._xbar1(rest)), -1)
        self._memo_e[m] = out
        return out

    def _e_i1(self, i: int, terms: Mapping[Monomial, Fraction]) -> Terms:
        """e_{i,1}·terms with e_{i,1} = (1,i)·e₁·(1,i)."""
        if i == 1:
            return self._lift(self._e, terms)
        swap = self._transposition(1, i)
        return self._apply_word(swap, self._lift(self._e, self._apply_word(swap, terms)))

    def _xbar(self, j: int, m: Monomial) -> Terms:
        if j == 1:
            return self._xbar1(m)
        hit = self._memo_xbar.get((j, m))
        if hit is not None:
            return hit
        # x̄_j = s̄_{j−1}·x̄_{j−1}·s̄_{j−1} − s̄_{j−1}
        first = self._sbar(j - 1, m)
        out = self._lift(partial(self._sbar, j - 1), self._lift(partial(self._xbar, j - 1), first))
        _acc(out, first, -1)
        self._memo_xbar[(j, m)] = out
        return out

    def _xbar1(self, m: Monomial) -> Terms:
        hit = self._memo_xbar.get((1, m))
        if hit is not None:
            return hit
        alpha, d, beta = m
        out: Terms
        if any(alpha):
            # x̄₁x_i = x_i x̄₁ + x′_i e_{i,1} + e_{i,1} x̄₁
            i = max(idx for idx, a in enumerate(alpha, 1) if a)
            rest = Monomial(_bump(alpha, i, -1), d, beta)
            inner = self._xbar1(rest)
            capped = self._e_i1(i, {rest: Fraction(1)})
            out = self._lift(partial(self._x, i), inner)
            _acc(out, self._lift(partial(self._x, i), capped))
            for j in range(1, i):
                _acc(out, self._apply_word(self._transposition(j, i), capped))
            _acc(out, self._e_i1(i, inner))
        else:
            row, _, idx = d.label(d.partner[d.topbar(1)])
            if row == "B":
                # 1̄ runs down to idx̄: x̄₁·D = D·x̄′_idx
                out = self._attach_right(alpha, d, _bump(beta, idx, 1))
                for ell in range(1, idx):
                    swap = Permutation.transposition(ell, idx, self.t, barred=True)
                    dd = diagrams.diagram_concat(d, self._perm_diagram(swap))[1]
                    _acc(out, {Monomial(alpha, dd, beta): Fraction(1)})
            else:
                # 1̄ caps with idx on top: x̄₁·D = −x′_idx·D
                out = {}
                _acc(out, self._x(idx, m), -1)
                for j in range(1, idx):
                    _acc(out, self._apply_word(self._transposition(j, idx), {m: Fraction(1)}), -1)
        self._memo_xbar[(1, m)] = out
        return out


class AlgebraElement:
    """An immutable rational combination of regular monomials of one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: WalledBrauerAlgebra, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.algebra = algebra
        self.terms: dict[Monomial, Fraction] = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    def _same(self, other: AlgebraElement) -> None:
        if other.algebra.context != self.algebra.context:
            raise ParameterError("elements belong to different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        return AlgebraElement(self.algebra, _acc(dict(self.terms), other.terms))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        return AlgebraElement(self.algebra, _acc(dict(self.terms), other.terms, -1))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: AlgebraElement | Fraction | int) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        scale = Fraction(other)
        return AlgebraElement(self.algebra, {m: c * scale for m, c in self.terms.items()})

    def __rmul__(self, other: Fraction | int) -> AlgebraElement:
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.context == other.algebra.context and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·{m}" for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


# --- JSON ----------------------------------------------------------------------------------


def element_to_json(a: AlgebraElement) -> dict:
    alg = a.algebra
    return {
        "k": alg.k,
        "r": alg.r,
        "t": alg.t,
        "params": alg.params.to_json(),
        "terms": [{**m.to_json(), "coeff": str(c)} for m, c in a.sorted_terms()],
    }


def element_from_json(data: Mapping, algebra: WalledBrauerAlgebra | None = None) -> AlgebraElement:
    if algebra is None:
        p = data["params"]
        params = Parameters.create(
            [Fraction(v) for v in p["u"]],
            [Fraction(v) for v in p["omega"]],
            None if p.get("ubar") is None else [Fraction(v) for v in p["ubar"]],
        )
        algebra = WalledBrauerAlgebra(params, int(data["r"]), int(data["t"]))
    elif (int(data["k"]), int(data["r"]), int(data["t"])) != (algebra.k, algebra.r, algebra.t):
        raise ParameterError("element JSON does not match the target algebra")
    out: Terms = {}
    for term in data["terms"]:
        m = Monomial(tuple(term["alpha"]), WalledDiagram.from_json(term["diagram"]), tuple(term["beta"]))
        algebra._check_monomial(m)
        _acc(out, {m: Fraction(term["coeff"])})
    return AlgebraElement(algebra, out)


# --- parameter sequences -------------------------------------------------------------------


def omega_sequence(params: Parameters, ell_max: int) -> list[Fraction]:
    return params.omega_sequence(ell_max)


def bar_omega_sequence(params: Parameters, ell_max: int) -> list[Fraction]:
    return params.bar_omega_sequence(ell_max)


# --- verification --------------------------------------------------------------------------


def lemma_zero_checks(algebra: WalledBrauerAlgebra, a_max: int = 3) -> list[tuple[str, AlgebraElement]]:
    """Residuals of e₁𝐟(x₁)x₁^a e₁ and e₁𝐠(x̄₁)x̄₁^a e₁ for a ≤ a_max (all must vanish)."""
    if not (algebra.r and algebra.t):
        return []
    p = algebra.params
    x1, xb1, e1 = algebra.word("x1"), algebra.word("xb1"), algebra.word("e1")
    f_x = algebra.polynomial(p.f_coeffs, x1)
    g_xb = algebra.polynomial(p.g_coeffs, xb1)
    out = []
    x_pow, xb_pow = algebra.one(), algebra.one()
    for a in range(a_max + 1):
        out.append((f"e1 f(x1) x1^{a} e1", e1 * f_x * x_pow * e1))
        out.append((f"e1 g(xb1) xb1^{a} e1", e1 * g_xb * xb_pow * e1))
        x_pow, xb_pow = x_pow * x1, xb_pow * xb1
    return out


def _relations(alg: WalledBrauerAlgebra, ref: Parameters) -> Iterable[tuple[str, AlgebraElement]]:
    """(name, LHS − RHS) for every defining relation that fits on (r,t) strands."""
    r, t, w = alg.r, alg.t, alg.word

    def rel(lhs: str, rhs: str) -> tuple[str, AlgebraElement]:
        return f"{lhs} = {rhs}", w(lhs) - w(rhs)

    for bar, n in (("", r), ("b", t)):
        for i in range(1, n):
            yield rel(f"s{bar}{i} s{bar}{i}", "1")
            if i + 1 < n:
                yield rel(f"s{bar}{i} s{bar}{i + 1} s{bar}{i}", f"s{bar}{i + 1} s{bar}{i} s{bar}{i + 1}")
            for j in range(i + 2, n):
                yield rel(f"s{bar}{i} s{bar}{j}", f"s{bar}{j} s{bar}{i}")
            # degenerate Hecke relations on each side
            yield f"x{bar}{i + 1} = s{bar}{i} x{bar}{i} s{bar}{i} - s{bar}{i}", (
                w(f"x{bar}{i + 1}") - w(f"s{bar}{i} x{bar}{i} s{bar}{i}") + w(f"s{bar}{i}")
            )
            yield rel(f"x{bar}{i} x{bar}{i + 1}", f"x{bar}{i + 1} x{bar}{i}")
            if i >= 2:
                yield rel(f"s{bar}{i} x{bar}1", f"x{bar}1 s{bar}{i}")
    for i in range(1, r):
        for j in range(1, t):
            yield rel(f"s{i} sb{j}", f"sb{j} s{i}")
    for i in range(1, r if t else 0):
        yield rel(f"s{i} xb1", f"xb1 s{i}")
    for j in range(1, t if r else 0):
        yield rel(f"sb{j} x1", f"x1 sb{j}")
    if not (r and t):
        return
    e1 = w("e1")
    omega, bar_omega = ref.omega_sequence(ref.k + 1), ref.bar_omega_sequence(ref.k + 1)
    yield "e1 e1 = w0 e1", w("e1 e1") - e1 * omega[0]
    if r >= 2:
        yield rel("e1 s1 e1", "e1")
        yield rel("s1 e1 s1 x1", "x1 s1 e1 s1")
        for i in range(2, r):
            yield rel(f"s{i} e1", f"e1 s{i}")
    if t >= 2:
        yield rel("e1 sb1 e1", "e1")
        yield rel("sb1 e1 sb1 xb1", "xb1 sb1 e1 sb1")
        for j in range(2, t):
            yield rel(f"sb{j} e1", f"e1 sb{j}")
    if r >= 2 and t >= 2:
        yield rel("e1 s1 sb1 e1 s1", "e1 s1 sb1 e1 sb1")
        yield rel("s1 e1 s1 sb1 e1", "sb1 e1 s1 sb1 e1")
    yield "e1 (x1 + xb1) = 0", w("e1 x1") + w("e1 xb1")
    yield "(x1 + xb1) e1 = 0", w("x1 e1") + w("xb1 e1")
    yield "x1 (e1 + xb1) = (e1 + xb1) x1", w("x1 e1") + w("x1 xb1") - w("e1 x1") - w("xb1 x1")
    yield "xb1 (e1 + x1) = (e1 + x1) xb1", w("xb1 e1") + w("xb1 x1") - w("e1 xb1") - w("x1 xb1")
    for a in range(ref.k + 2):
        yield f"e1 x1^{a} e1 = w{a} e1", w(f"e1 x1^{a} e1") - e1 * omega[a]
        yield f"e1 xb1^{a} e1 = wb{a} e1", w(f"e1 xb1^{a} e1") - e1 * bar_omega[a]
    sign = -1 if ref.k % 2 else 1
    f_side = alg.polynomial(ref.f_coeffs, w("x1"))
    g_side = alg.polynomial(ref.g_coeffs, w("xb1"))
    yield "e1 f(x1) = (-1)^k e1 g(xb1)", e1 * f_side - e1 * g_side * sign


def _conjugation_checks(alg: WalledBrauerAlgebra, rng: random.Random, samples: int) -> Iterable[tuple[str, AlgebraElement]]:
    """w·x′_i·w⁻¹ = x′_{(i)w⁻¹} and w·𝐟(x′_i)·w⁻¹ = 𝐟(x′_{(i)w⁻¹}) for random w."""
    r = alg.r
    if r < 1:
        return
    primes = {i: alg.x_prime(i) for i in range(1, r + 1)}
    f = alg.params.f_coeffs
    f_primes = {i: alg.polynomial(f, primes[i]) for i in primes}
    for _ in range(samples):
        w = Permutation(tuple(rng.sample(range(1, r + 1), r)))
        pw, pinv = alg.permutation(top=w), alg.permutation(top=w.inverse())
        for i in range(1, r + 1):
            j = w.inverse()(i)
            yield f"w x'{i} w^-1 = x'{j} (w={w})", pw * primes[i] * pinv - primes[j]
            yield f"w f(x'{i}) w^-1 = f(x'{j}) (w={w})", pw * f_primes[i] * pinv - f_primes[j]


def verify_presentation(
    params: Parameters,
    r: int,
    t: int,
    *,
    reference: Parameters | None = None,
    seed: int = 0,
    samples: int = 3,
    algebra: WalledBrauerAlgebra | None = None,
) -> Report:
    """Evaluate every defining relation as normalize(LHS) − normalize(RHS).

    `reference` supplies the ω values and 𝐠 the relations are compared against; it defaults
    to `params`, and differs only when checking a deliberately tampered algebra.
    """
    alg = algebra or WalledBrauerAlgebra(params, r, t)
    ref = reference or params
    report = Report(f"presentation k={params.k} (r,t)=({r},{t})")
    residuals = [*_relations(alg, ref), *lemma_zero_checks(alg)]
    residuals += list(_conjugation_checks(alg, random.Random(seed), samples))
    bad = 0
    for name, diff in residuals:
        if not diff.is_zero():
            bad += 1
            report.add(False, name, f"residual {diff}")
    report.add(bad == 0, "relations", f"{len(residuals) - bad}/{len(residuals)} residuals vanish")
    report.data = {"k": params.k, "r": r, "t": t, "params": params.to_json(), "relations": len(residuals)}
    return report


def dimension_report(
    params: Parameters,
    r: int,
    t: int,
    *,
    seed: int = 0,
    samples: int = 10,
    algebra: WalledBrauerAlgebra | None = None,
) -> Report:
    """Basis count against k^{r+t}(r+t)!, sampled closure of basis products, and associativity on random triples."""
    alg = algebra or WalledBrauerAlgebra(params, r, t)
    report = Report(f"dimension k={params.k} (r,t)=({r},{t})")
    monomials = alg.basis()
    expected = rank(params.k, r, t)
    report.add(len(monomials) == expected, "basis", f"{len(monomials)} regular monomials, k^(r+t)(r+t)! = {expected}")
    omegas = params.omega_sequence(2 * params.k)
    rng = random.Random(seed)
    regular = set(monomials)
    stray = 0
    for _ in range(samples):
        a, b = rng.choice(monomials), rng.choice(monomials)
        stray += not set(alg.product(a, b)) <= regular
    report.add(stray == 0, "closure", f"{samples - stray}/{samples} sampled basis products stay regular")
    bad = 0
    for _ in range(samples):
        a, b, c = (alg.sample(rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad += 1
            log.debug("associativity fails on %s, %s, %s", a, b, c)
    report.add(bad == 0, "associativity", f"{samples - bad}/{samples} random triples")
    report.data = {
        "k": params.k,
        "r": r,
        "t": t,
        "params": params.to_json(),
        "dimension": len(monomials),
        "omega": [str(w) for w in omegas],
    }
    return report
