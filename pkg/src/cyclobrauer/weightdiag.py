"""Weight diagrams for gl(m|n) and the bijection between Λ_{2,r,t} and dominant weights of M_pq^{rt}.

A dominant integral weight ξ is drawn on the integer line: after the ρ-shift, the left entries
mark `>`, the negated right entries mark `<`, and a vertex carrying both is `x`. Everything
else is empty.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from cyclobrauer.cellular import CellIndex
from cyclobrauer.combinatorics import Bipartition, Partition, enumerate_bipartitions, kleshchev
from cyclobrauer.errors import ParameterError

EMPTY = "."
LESS = "<"
GREATER = ">"
CROSS = "x"


@dataclass(frozen=True, slots=True)
class SuperWeight:
    """(ξ^L | ξ^R): m left and n right coordinates."""

    left: tuple[Fraction, ...]
    right: tuple[Fraction, ...]

    @classmethod
    def of(cls, left: Iterable[Fraction | int], right: Iterable[Fraction | int]) -> SuperWeight:
        return cls(tuple(Fraction(v) for v in left), tuple(Fraction(v) for v in right))

    @property
    def m(self) -> int:
        return len(self.left)

    @property
    def n(self) -> int:
        return len(self.right)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self.left + self.right

    def __add__(self, other: SuperWeight) -> SuperWeight:
        return SuperWeight.of(
            (a + b for a, b in zip(self.left, other.left, strict=True)),
            (a + b for a, b in zip(self.right, other.right, strict=True)),
        )

    def __sub__(self, other: SuperWeight) -> SuperWeight:
        return SuperWeight.of(
            (a - b for a, b in zip(self.left, other.left, strict=True)),
            (a - b for a, b in zip(self.right, other.right, strict=True)),
        )

    @property
    def integral_dominant(self) -> bool:
        for part in (self.left, self.right):
            for a, b in zip(part, part[1:]):
                d = a - b
                if d.denominator != 1 or d < 0:
                    return False
        return True

    def rho_shift(self) -> SuperWeight:
        return self + rho(self.m, self.n)

    def to_json(self) -> dict:
        return {"left": [str(v) for v in self.left], "right": [str(v) for v in self.right]}

    def __str__(self) -> str:
        return f"({','.join(map(str, self.left))}|{','.join(map(str, self.right))})"


def rho(m: int, n: int) -> SuperWeight:
    """(0,−1,…,1−m | m−1,m−2,…,m−n)."""
    return SuperWeight.of((-i for i in range(m)), (m - j for j in range(1, n + 1)))


def lambda_pq(m: int, n: int, p: Fraction | int, q: Fraction | int) -> SuperWeight:
    return SuperWeight.of([p] * m, [-Fraction(q)] * n)


def atypicality(weight: SuperWeight) -> int:
    """#{(i,j) : ξ^{L,ρ}_i + ξ^{R,ρ}_j = 0}."""
    shifted = weight.rho_shift()
    return sum(1 for a in shifted.left for b in shifted.right if a + b == 0)


# --- diagrams ------------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class WeightDiagram:
    """Non-empty vertices only, sorted by vertex."""

    marks: tuple[tuple[int, str], ...]

    @classmethod
    def of(cls, marks: Mapping[int, str]) -> WeightDiagram:
        return cls(tuple(sorted((v, s) for v, s in marks.items() if s != EMPTY)))

    def symbol(self, vertex: int) -> str:
        return dict(self.marks).get(vertex, EMPTY)

    def vertices(self, symbol: str) -> list[int]:
        return [v for v, s in self.marks if s == symbol]

    def counts(self) -> dict[str, int]:
        out = {LESS: 0, GREATER: 0, CROSS: 0}
        for _, s in self.marks:
            out[s] += 1
        return out

    @property
    def support(self) -> set[int]:
        return {v for v, _ in self.marks}

    @property
    def typical(self) -> bool:
        return not self.vertices(CROSS)

    def to_json(self) -> dict[str, str]:
        return {str(v): s for v, s in self.marks}

    def render(self, lo: int | None = None, hi: int | None = None) -> str:
        """Symbols above their vertex indices."""
        support = [v for v, _ in self.marks] or [0]
        lo = min(support) - 1 if lo is None else lo
        hi = max(support) + 1 if hi is None else hi
        width = max(len(str(v)) for v in range(lo, hi + 1)) + 1
        top = "".join(self.symbol(v).rjust(width) for v in range(lo, hi + 1))
        bottom = "".join(str(v).rjust(width) for v in range(lo, hi + 1))
        return f"{top}\n{bottom}"


def weight_diagram(weight: SuperWeight) -> WeightDiagram:
    if not weight.integral_dominant:
        raise ParameterError(f"weight {weight} is not integral dominant")
    shifted = weight.rho_shift()
    if any(v.denominator != 1 for v in shifted.coords):
        raise ParameterError(f"weight {weight} is not integral")
    left = {int(v) for v in shifted.left}
    right = {int(-v) for v in shifted.right}
    both = left & right
    marks = {v: CROSS for v in both}
    marks.update({v: LESS for v in right - both})
    marks.update({v: GREATER for v in left - both})
    return WeightDiagram.of(marks)


def diagram_weight(diagram: WeightDiagram, m: int, n: int) -> SuperWeight:
    """The inverse of weight_diagram."""
    left = sorted(diagram.vertices(GREATER) + diagram.vertices(CROSS), reverse=True)
    right = sorted(diagram.vertices(LESS) + diagram.vertices(CROSS))
    if len(left) != m or len(right) != n:
        raise ParameterError(f"diagram has {len(left)} left and {len(right)} right entries, expected ({m},{n})")
    shifted = SuperWeight.of(left, (-v for v in right))
    return shifted - rho(m, n)


def lambda_top(diagram: WeightDiagram) -> WeightDiagram:
    """Move every x, rightmost first, to the nearest vertex on its right that was empty and is unclaimed."""
    marks = dict(diagram.marks)
    originally_full = set(marks)
    claimed: set[int] = set()
    for x in sorted(diagram.vertices(CROSS), reverse=True):
        j = x + 1
        while j in originally_full or j in claimed:
            j += 1
        del marks[x]
        marks[j] = CROSS
        claimed.add(j)
    return WeightDiagram.of(marks)


def window(m: int, n: int, p: Fraction | int, q: Fraction | int) -> range:
    """I⁺_pq = {p−m+1, …, q−m+n}."""
    p, q = Fraction(p), Fraction(q)
    if p.denominator != 1 or q.denominator != 1:
        raise ParameterError(f"p and q must be integers here, got {p}, {q}")
    return range(int(p) - m + 1, int(q) - m + n + 1)


def tilting_direct(diagram: WeightDiagram, vertices: Sequence[int]) -> bool:
    """S ⊂ I⁺ and #∅_{≥j} ≥ #x_{≥j} for every j in I⁺."""
    inside = set(vertices)
    if not diagram.support <= inside:
        return False
    for j in vertices:
        empties = sum(1 for v in vertices if v >= j and diagram.symbol(v) == EMPTY)
        crosses = sum(1 for v in vertices if v >= j and diagram.symbol(v) == CROSS)
        if empties < crosses:
            return False
    return True


def tilting_top_form(diagram: WeightDiagram, vertices: Sequence[int]) -> bool:
    """S ⊂ I⁺ and #∅_{≤j} ≥ #x_{≤j} for every j in I⁺."""
    inside = set(vertices)
    if not diagram.support <= inside:
        return False
    for j in vertices:
        empties = sum(1 for v in vertices if v <= j and diagram.symbol(v) == EMPTY)
        crosses = sum(1 for v in vertices if v <= j and diagram.symbol(v) == CROSS)
        if empties < crosses:
            return False
    return True


@dataclass(frozen=True)
class TiltingVerdict:
    direct: bool
    via_top: bool

    @property
    def consistent(self) -> bool:
        return self.direct == self.via_top

    @property
    def holds(self) -> bool:
        return self.direct and self.via_top


def bipartition_weight(lam: Bipartition, p: Fraction | int, q: Fraction | int, m: int, n: int) -> SuperWeight:
    """λ̄ = λ_pq + (λ¹ | λ²) for a bipartition of r ≤ min(m, n)."""
    if len(lam.first) > m or len(lam.second) > n:
        raise ParameterError(f"{lam} does not fit gl({m}|{n})")
    return lambda_pq(m, n, p, q) + SuperWeight.of(
        (lam.first.part(i) for i in range(1, m + 1)), (lam.second.part(j) for j in range(1, n + 1))
    )


def tilting_criterion(lam: Bipartition, p: Fraction | int, q: Fraction | int, m: int, n: int) -> TiltingVerdict:
    """Whether T_λ̄ is a summand of M_pq^{r0}, read directly on D_λ and on D_{λ^top}."""
    if Fraction(p) - Fraction(q) > -m:
        raise ParameterError(f"the tilting criterion needs p − q ≤ −m, got p={p}, q={q}, m={m}")
    vertices = list(window(m, n, p, q))
    diagram = weight_diagram(bipartition_weight(lam, p, q, m, n))
    return TiltingVerdict(tilting_direct(diagram, vertices), tilting_top_form(lambda_top(diagram), vertices))


def top_bipartition(lam: Bipartition, p: Fraction | int, q: Fraction | int, m: int, n: int) -> Bipartition | None:
    """λ^top as a bipartition of the same size, or None when λ̄^top − λ_pq is not one."""
    top = diagram_weight(lambda_top(weight_diagram(bipartition_weight(lam, p, q, m, n))), m, n)
    diff = top - lambda_pq(m, n, p, q)
    parts = [v for v in diff.coords]
    if any(v.denominator != 1 or v < 0 for v in parts):
        return None
    try:
        out = Bipartition(
            Partition(tuple(int(v) for v in diff.left if v)), Partition(tuple(int(v) for v in diff.right if v))
        )
    except ParameterError:
        return None
    return out if out.size == lam.size else None


def tilting_summands(r: int, p: Fraction | int, q: Fraction | int, m: int, n: int) -> list[Bipartition]:
    """λ ∈ Λ₂⁺(r) with (λ^top)′ Kleshchev for u₁ = −p, u₂ = m − q."""
    u1, u2 = -Fraction(p), m - Fraction(q)
    out = []
    for lam in enumerate_bipartitions(r):
        top = top_bipartition(lam, p, q, m, n)
        if top is not None and kleshchev(top.dual(), u1, u2):
            out.append(lam)
    return out


# --- the Λ_{2,r,t} bijection --------------------------------------------------------------------


def _weight_of(mu: Bipartition, nu: Bipartition, m: int, n: int) -> SuperWeight:
    """μ − ν̂ with ν̂ = (ν¹_m,…,ν¹_1 | ν²_n,…,ν²_1)."""
    left = [mu.first.part(i) - nu.first.part(m + 1 - i) for i in range(1, m + 1)]
    right = [mu.second.part(j) - nu.second.part(n + 1 - j) for j in range(1, n + 1)]
    return SuperWeight.of(left, right)


def triple_to_weight(index: CellIndex, p: Fraction | int, q: Fraction | int, m: int, n: int) -> SuperWeight:
    """λ̄ = λ_pq + μ − ν̂."""
    mu, nu = index.mu, index.nu
    if len(mu.first) + len(nu.first) > m or len(mu.second) + len(nu.second) > n:
        raise ParameterError(f"{index} does not fit gl({m}|{n}): μ and ν̂ overlap")
    return lambda_pq(m, n, p, q) + _weight_of(mu, nu, m, n)


def weight_to_triple(
    weight: SuperWeight, p: Fraction | int, q: Fraction | int, r: int, t: int
) -> CellIndex:
    """The unique (f, μ, ν) with weight = λ_pq + μ − ν̂."""
    m, n = weight.m, weight.n
    if not weight.integral_dominant:
        raise ParameterError(f"{weight} is not a dominant integral weight")
    xi = weight - lambda_pq(m, n, p, q)
    if any(v.denominator != 1 for v in xi.coords):
        raise ParameterError(f"{weight} − λ_pq is not integral")
    mu1 = [0] * m
    nu1 = [0] * m
    for i, v in enumerate(xi.left, 1):
        if v > 0:
            mu1[i - 1] = int(v)
        elif v < 0:
            nu1[m - i] = int(-v)
    mu2 = [0] * n
    nu2 = [0] * n
    for j, v in enumerate(xi.right, 1):
        if v > 0:
            mu2[j - 1] = int(v)
        elif v < 0:
            nu2[n - j] = int(-v)
    try:
        mu = Bipartition.of([v for v in mu1 if v], [v for v in mu2 if v])
        nu = Bipartition.of([v for v in nu1 if v], [v for v in nu2 if v])
    except ParameterError as exc:
        raise ParameterError(f"{weight} is not a dominant weight of M_pq^({r},{t})") from exc
    f = r - mu.size
    if f < 0 or t - nu.size != f or f > min(r, t):
        raise ParameterError(f"{weight} is not a weight of M_pq^({r},{t}) (sizes {mu.size}, {nu.size})")
    return CellIndex(f, mu, nu)
