"""Walled Brauer diagrams.

A diagram on (r, t) strands is stored as a flat partner array over 2(r+t) vertices. The top
row is laid out r, r−1, …, 1, 1̄, …, t̄ (so the wall sits between positions r−1 and r) and
the bottom row repeats the layout shifted by r+t. Products put the left factor on top.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cache

from cyclobrauer.combinatorics import Permutation, coset_elements, s_range
from cyclobrauer.errors import ParameterError, VerificationError

log = logging.getLogger(__name__)

# A generator word: ("e", 1), ("s", i), ("sbar", j).
Generator = tuple[str, int]


@dataclass(frozen=True, slots=True)
class WalledDiagram:
    r: int
    t: int
    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.r + self.t
        p = tuple(int(v) for v in self.partner)
        if len(p) != 2 * n:
            raise ParameterError(f"diagram on ({self.r},{self.t}) needs {2 * n} vertices, got {len(p)}")
        for v, w in enumerate(p):
            if not 0 <= w < 2 * n or w == v or p[w] != v:
                raise ParameterError(f"not a perfect matching at vertex {v}: {p}")
            if not _edge_allowed(self.r, n, v, w):
                raise ParameterError(f"edge {_name(self.r, n, v)}-{_name(self.r, n, w)} crosses the wall illegally")
        object.__setattr__(self, "partner", p)

    # vertex positions
    @property
    def size(self) -> int:
        return self.r + self.t

    def top(self, i: int) -> int:
        return self.r - i

    def topbar(self, j: int) -> int:
        return self.r + j - 1

    def bottom(self, i: int) -> int:
        return self.size + self.r - i

    def bottombar(self, j: int) -> int:
        return self.size + self.r + j - 1

    def label(self, v: int) -> tuple[str, bool, int]:
        """(row "T"/"B", barred, strand index) of a vertex position."""
        return _label(self.r, self.size, v)

    @property
    def f(self) -> int:
        """Number of horizontal edges on each row."""
        n = self.size
        return sum(1 for v in range(n) if self.partner[v] < n) // 2

    def is_permutation(self) -> bool:
        return self.f == 0

    def to_perms(self) -> tuple[Permutation, Permutation]:
        """The (top, bar) permutation pair of an e-free diagram."""
        if self.f:
            raise ParameterError("diagram has horizontal edges; it is not a permutation")
        top = tuple(self.label(self.partner[self.top(i)])[2] for i in range(1, self.r + 1))
        bar = tuple(self.label(self.partner[self.topbar(j)])[2] for j in range(1, self.t + 1))
        return Permutation(top), Permutation(bar, barred=True)

    def to_json(self) -> dict:
        n = self.size
        edges = [[_name(self.r, n, v), _name(self.r, n, w)] for v, w in enumerate(self.partner) if v < w]
        return {"r": self.r, "t": self.t, "edges": edges}

    @classmethod
    def from_json(cls, data: dict) -> WalledDiagram:
        r, t = int(data["r"]), int(data["t"])
        n = r + t
        partner = [-1] * (2 * n)
        for a, b in data["edges"]:
            v, w = _position(r, n, a), _position(r, n, b)
            partner[v], partner[w] = w, v
        return cls(r, t, tuple(partner))

    def __str__(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.to_json()["edges"])


def _label(r: int, n: int, v: int) -> tuple[str, bool, int]:
    row = "T" if v < n else "B"
    pos = v % n
    return (row, False, r - pos) if pos < r else (row, True, pos - r + 1)


def _name(r: int, n: int, v: int) -> str:
    row, barred, idx = _label(r, n, v)
    return f"{row}{'b' if barred else ''}{idx}"


def _position(r: int, n: int, name: str) -> int:
    row, rest = name[0], name[1:]
    barred = rest.startswith("b")
    idx = int(rest[1:] if barred else rest)
    pos = r + idx - 1 if barred else r - idx
    if row not in "TB" or not 0 <= pos < n:
        raise ParameterError(f"bad vertex name {name!r}")
    return pos + (n if row == "B" else 0)


def _edge_allowed(r: int, n: int, v: int, w: int) -> bool:
    row_v, bar_v, _ = _label(r, n, v)
    row_w, bar_w, _ = _label(r, n, w)
    if row_v == row_w:
        return bar_v != bar_w  # horizontal edges cross the wall
    return bar_v == bar_w  # vertical edges stay on their side


# --- constructors --------------------------------------------------------------------------


def from_perms(top: Permutation, bar: Permutation) -> WalledDiagram:
    """The diagram joining top a to bottom (a)w on each side."""
    r, t = top.n, bar.n
    n = r + t
    partner = [0] * (2 * n)
    for a in range(1, r + 1):
        v, w = r - a, n + r - top(a)
        partner[v], partner[w] = w, v
    for a in range(1, t + 1):
        v, w = r + a - 1, n + r + bar(a) - 1
        partner[v], partner[w] = w, v
    return WalledDiagram(r, t, tuple(partner))


def identity(r: int, t: int) -> WalledDiagram:
    return from_perms(Permutation.identity(r), Permutation.identity(t, barred=True))


def with_caps(r: int, t: int, caps: Iterable[tuple[int, int]]) -> WalledDiagram:
    """Horizontal edges [i, j̄] on both rows for each cap, verticals [a,a], [b̄,b̄] elsewhere."""
    n = r + t
    partner = list(identity(r, t).partner)
    for i, j in caps:
        if not (1 <= i <= r and 1 <= j <= t):
            raise ParameterError(f"cap [{i},{j}̄] out of range for ({r},{t})")
        for off in (0, n):
            v, w = r - i + off, r + j - 1 + off
            partner[v], partner[w] = w, v
    return WalledDiagram(r, t, tuple(partner))


def generator(g: Generator, r: int, t: int) -> WalledDiagram:
    kind, i = g
    if kind == "e":
        if i != 1 or r < 1 or t < 1:
            raise ParameterError(f"e{i} is not a generator of the ({r},{t}) walled Brauer algebra")
        return with_caps(r, t, [(1, 1)])
    if kind == "s":
        if not 1 <= i < r:
            raise ParameterError(f"s{i} out of range for r={r}")
        return from_perms(Permutation.simple(i, r), Permutation.identity(t, barred=True))
    if kind == "sbar":
        if not 1 <= i < t:
            raise ParameterError(f"s̄{i} out of range for t={t}")
        return from_perms(Permutation.identity(r), Permutation.simple(i, t, barred=True))
    raise ParameterError(f"unknown diagram generator {g!r}")


# --- product -------------------------------------------------------------------------------


def diagram_concat(d1: WalledDiagram, d2: WalledDiagram) -> tuple[int, WalledDiagram]:
    """D₁ on top of D₂: (number of closed loops removed, traced composite)."""
    if (d1.r, d1.t) != (d2.r, d2.t):
        raise ParameterError(f"cannot compose ({d1.r},{d1.t}) with ({d2.r},{d2.t}) diagrams")
    n = d1.size
    p1, p2 = d1.partner, d2.partner
    result = [-1] * (2 * n)
    seen = [False] * n
    for v in range(2 * n):
        if result[v] >= 0:
            continue
        upper, x = v < n, v
        while True:
            if upper:
                y = p1[x]
                if y < n:
                    break
                seen[y - n] = True
                upper, x = False, y - n
            else:
                y = p2[x]
                if y >= n:
                    break
                seen[y] = True
                upper, x = True, y + n
        result[v], result[y] = y, v
    circles = 0
    for m in range(n):
        if seen[m]:
            continue
        circles += 1
        x = m
        while not seen[x]:
            y = p2[x]
            seen[x] = seen[y] = True
            x = p1[y + n] - n
    return circles, WalledDiagram(d1.r, d1.t, tuple(result))


def diagram_from_word(word: Sequence[Generator], r: int, t: int) -> tuple[int, WalledDiagram]:
    """Left-to-right product of generators: (ω₀-power, diagram)."""
    power, d = 0, identity(r, t)
    for g in word:
        c, d = diagram_concat(d, generator(g, r, t))
        power += c
    return power, d


def e_word(i: int, j: int) -> list[Generator]:
    """e_{i,j} = s̄_{j,1} s_{i,1} e₁ s_{1,i} s̄_{1,j}."""
    return (
        [("sbar", x) for x in s_range(j, 1)]
        + [("s", x) for x in s_range(i, 1)]
        + [("e", 1)]
        + [("s", x) for x in s_range(1, i)]
        + [("sbar", x) for x in s_range(1, j)]
    )


def e_power_word(f: int) -> list[Generator]:
    """e^f = e₁e₂⋯e_f with e_i = e_{i,i}."""
    return [g for i in range(1, f + 1) for g in e_word(i, i)]


def frak_e_word(r: int, t: int, f: int) -> list[Generator]:
    """𝔢^f = e_{r,t} e_{r−1,t−1} ⋯ e_{r−f+1,t−f+1}."""
    return [g for a in range(f) for g in e_word(r - a, t - a)]


def perm_word(top: Permutation, bar: Permutation) -> list[Generator]:
    return [("s", i) for i in top.reduced_word()] + [("sbar", j) for j in bar.reduced_word()]


# --- factorization -------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Factorization:
    """D = c⁻¹ e^f w d with c, d ∈ 𝒟^f and w ∈ 𝔖_{r−f} × 𝔖̄_{t−f} on the letters after f."""

    c: tuple[Generator, ...]
    f: int
    w: tuple[Permutation, Permutation]
    d: tuple[Generator, ...]

    def word(self) -> list[Generator]:
        return list(reversed(self.c)) + e_power_word(self.f) + perm_word(*self.w) + list(self.d)


def _fixed_prefix_perms(n: int, f: int, barred: bool) -> list[Permutation]:
    rest = range(f + 1, n + 1)
    return [Permutation(tuple(range(1, f + 1)) + tuple(p), barred) for p in itertools.permutations(rest)]


@cache
def factorization_table(r: int, t: int) -> dict[WalledDiagram, Factorization]:
    """Every (r,t) diagram with its unique factorization, in (f, c, w, d) enumeration order."""
    table: dict[WalledDiagram, Factorization] = {}
    for f in range(min(r, t) + 1):
        reps = [word for word, _ in coset_elements(r, t, f, "head")]
        middles = [
            (u, v) for u in _fixed_prefix_perms(r, f, False) for v in _fixed_prefix_perms(t, f, True)
        ]
        for c in reps:
            for w in middles:
                for d in reps:
                    fac = Factorization(c, f, w, d)
                    power, diagram = diagram_from_word(fac.word(), r, t)
                    if power or diagram in table:
                        raise VerificationError(f"factorization is not unique at ({r},{t}), f={f}")
                    table[diagram] = fac
    if len(table) != math.factorial(r + t):
        raise VerificationError(f"expected {math.factorial(r + t)} diagrams, built {len(table)}")
    log.debug("factorization table (%d,%d): %d diagrams", r, t, len(table))
    return table


def all_diagrams(r: int, t: int) -> list[WalledDiagram]:
    return list(factorization_table(r, t))


def diagram_factorize(d: WalledDiagram) -> Factorization:
    return factorization_table(d.r, d.t)[d]


def diagram_word(d: WalledDiagram) -> list[Generator]:
    """A generator word whose product is exactly d (no loops)."""
    return diagram_factorize(d).word()
