"""Partitions, bipartitions, tableaux and permutations.

Permutations act on the RIGHT: `(a)w` is written `w(a)` and a product `u * v` means
"first u, then v", so `(u * v)(a) == v(u(a))`. This matches the convention that the
symmetric group acts on tableau entries and strand positions from the right. Barred and
unbarred groups share the `Permutation` type; `barred` is a tag only.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from cyclobrauer.errors import ParameterError

# --- partitions ----------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in itertools.pairwise(parts)):
            raise ParameterError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th row length (1-based); rows beyond the length read 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.parts) for j in range(row)]

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..."""
    if n < 0:
        raise ParameterError(f"negative size {n}")
    return [Partition(p) for p in _partition_tuples(n, n if max_part is None else max_part)]


@cache
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first, *rest) for rest in _partition_tuples(n - first, first))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Bipartition:
    first: Partition = Partition()
    second: Partition = Partition()

    @classmethod
    def of(cls, first: Sequence[int] = (), second: Sequence[int] = ()) -> Bipartition:
        return cls(Partition(tuple(first)), Partition(tuple(second)))

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def component(self, ell: int) -> Partition:
        return self.first if ell == 1 else self.second

    def conjugate(self) -> Bipartition:
        """Componentwise conjugate ((λ¹)′, (λ²)′)."""
        return Bipartition(self.first.conjugate(), self.second.conjugate())

    def swap(self) -> Bipartition:
        """ν ↦ ν^o = (ν², ν¹)."""
        return Bipartition(self.second, self.first)

    def dual(self) -> Bipartition:
        """((λ²)′, (λ¹)′): the label of the dual cell (conjugate of the swapped pair)."""
        return self.swap().conjugate()

    def composition(self) -> tuple[int, ...]:
        """Concatenation λ¹ then λ² (the Young subgroup of the combined shape)."""
        return self.first.parts + self.second.parts

    def to_json(self) -> list[list[int]]:
        return [self.first.to_json(), self.second.to_json()]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> Bipartition:
        if len(data) != 2:
            raise ParameterError(f"a bipartition needs two components, got {data!r}")
        return cls.of(data[0], data[1])

    def __str__(self) -> str:
        return f"({self.first},{self.second})"


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """Λ₂⁺(n): first-component size descending, each component in reverse-lex order."""
    if n < 0:
        raise ParameterError(f"negative size {n}")
    return [Bipartition(p1, p2) for a in range(n, -1, -1) for p1 in partitions(a) for p2 in partitions(n - a)]


def dominance_leq(lam: Bipartition, mu: Bipartition) -> bool:
    """λ ⊴ μ: prefix sums with the whole first component counted before the second."""
    if lam.size != mu.size:
        raise ParameterError(f"dominance needs equal sizes, got {lam.size} and {mu.size}")
    offset_l = offset_m = 0
    for ell in (1, 2):
        a, b = lam.component(ell), mu.component(ell)
        run_l, run_m = offset_l, offset_m
        for i in range(1, max(len(a), len(b)) + 1):
            run_l += a.part(i)
            run_m += b.part(i)
            if run_l > run_m:
                return False
        if offset_l > offset_m:
            return False
        offset_l += a.size
        offset_m += b.size
    return True


def dominates_strictly(lam: Bipartition, mu: Bipartition) -> bool:
    """λ ⊳ μ."""
    return lam != mu and dominance_leq(mu, lam)


def kleshchev(lam: Bipartition, u1: Fraction, u2: Fraction) -> bool:
    """λ¹_{u₁−u₂+i} ≤ λ²_i for all i, or vacuous when u₁−u₂ ∉ ℕ."""
    diff = Fraction(u1) - Fraction(u2)
    if diff.denominator != 1 or diff < 0:
        return True
    d = int(diff)
    return all(lam.first.part(d + i) <= lam.second.part(i) for i in range(1, len(lam.first) + 1))


# --- permutations --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]
    barred: bool = False

    def __post_init__(self) -> None:
        images = tuple(int(a) for a in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParameterError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int, barred: bool = False) -> Permutation:
        return cls(tuple(range(1, n + 1)), barred)

    @classmethod
    def simple(cls, i: int, n: int, barred: bool = False) -> Permutation:
        """s_i = (i, i+1)."""
        return cls.transposition(i, i + 1, n, barred)

    @classmethod
    def transposition(cls, i: int, j: int, n: int, barred: bool = False) -> Permutation:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParameterError(f"transposition ({i},{j}) out of range for n={n}")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images), barred)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int, barred: bool = False) -> Permutation:
        w = cls.identity(n, barred)
        for i in word:
            w = w * cls.simple(i, n, barred)
        return w

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise ParameterError(f"cannot compose permutations of {self.n} and {other.n} letters")
        return Permutation(tuple(other.images[a - 1] for a in self.images), self.barred)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for a, b in enumerate(self.images, start=1):
            inv[b - 1] = a
        return Permutation(tuple(inv), self.barred)

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.images, start=1))

    def length(self) -> int:
        return sum(1 for i, j in itertools.combinations(range(self.n), 2) if self.images[i] > self.images[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def reduced_word(self) -> list[int]:
        """A reduced word i₁…i_ℓ with s_{i₁}⋯s_{i_ℓ} == self."""
        word: list[int] = []
        images = list(self.images)
        while True:
            for i in range(len(images) - 1):
                if images[i] > images[i + 1]:
                    word.append(i + 1)
                    images[i], images[i + 1] = images[i + 1], images[i]
                    break
            else:
                return word

    def to_json(self) -> list[int]:
        return list(self.images)

    def __str__(self) -> str:
        return ("~" if self.barred else "") + "[" + " ".join(map(str, self.images)) + "]"


def s_range(a: int, b: int) -> list[int]:
    """Indices of s_{a,b}: s_a⋯s_{b−1} if a<b, s_{a−1}⋯s_b if a>b, empty if a=b."""
    if a < b:
        return list(range(a, b))
    if a > b:
        return list(range(a - 1, b - 1, -1))
    return []


def w_a_perm(r: int, a: int) -> Permutation:
    """The block rotation i ↦ r−a+i (i ≤ a), i ↦ i−a (i > a)."""
    if not 0 <= a <= r:
        raise ParameterError(f"w_a needs 0 ≤ a ≤ r, got a={a}, r={r}")
    return Permutation(tuple(r - a + i if i <= a else i - a for i in range(1, r + 1)))


def jucys_murphy_word(i: int) -> list[tuple[int, int]]:
    """The transpositions (j, i), j < i, whose sum is L_i."""
    return [(j, i) for j in range(1, i)]


# --- group algebra -------------------------------------------------------------------------


class GroupAlgebraElement:
    """A finite combination Σ c_w w over one symmetric group; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Permutation, Fraction] | None = None):
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, w: Permutation, coeff: Fraction | int = 1) -> GroupAlgebraElement:
        return cls({w: Fraction(coeff)})

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return GroupAlgebraElement(out)

    def __neg__(self) -> GroupAlgebraElement:
        return GroupAlgebraElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + (-other)

    def __mul__(self, other: GroupAlgebraElement | Fraction | int) -> GroupAlgebraElement:
        if not isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement({w: c * other for w, c in self.terms.items()})
        out: dict[Permutation, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                uv = u * v
                out[uv] = out.get(uv, Fraction(0)) + a * b
        return GroupAlgebraElement(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return " + ".join(f"{c}*{w}" for w, c in self.terms.items()) or "0"


def young_subgroup(composition: Sequence[int], n: int | None = None, offset: int = 0) -> list[Permutation]:
    """𝔖_λ for a composition λ placed on letters offset+1..offset+|λ| of 𝔖_n."""
    size = sum(composition)
    n = size + offset if n is None else n
    if offset + size > n or any(p < 0 for p in composition):
        raise ParameterError(f"composition {tuple(composition)} does not fit in {n} letters at offset {offset}")
    blocks: list[list[int]] = []
    start = offset + 1
    for p in composition:
        blocks.append(list(range(start, start + p)))
        start += p
    out: list[Permutation] = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(1, n + 1))
        for block, perm in zip(blocks, choice, strict=True):
            for a, b in zip(block, perm, strict=True):
                images[a - 1] = b
        out.append(Permutation(tuple(images)))
    return out


def young_elements(
    composition: Sequence[int], n: int | None = None, offset: int = 0
) -> tuple[GroupAlgebraElement, GroupAlgebraElement]:
    """(x_λ, y_λ) = (Σ w, Σ sign(w) w) over the Young subgroup 𝔖_λ."""
    group = young_subgroup(composition, n, offset)
    x = GroupAlgebraElement({w: Fraction(1) for w in group})
    y = GroupAlgebraElement({w: Fraction(w.sign()) for w in group})
    return x, y


# --- tableaux ------------------------------------------------------------------------------

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class BiTableau:
    first: Rows = ()
    second: Rows = ()

    @property
    def shape(self) -> Bipartition:
        return Bipartition(Partition(tuple(map(len, self.first))), Partition(tuple(map(len, self.second))))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(a for rows in (self.first, self.second) for row in rows for a in row)

    @property
    def standard(self) -> bool:
        word = self.reading_word()
        if sorted(word) != list(range(1, len(word) + 1)):
            return False
        for rows in (self.first, self.second):
            for row in rows:
                if any(a >= b for a, b in itertools.pairwise(row)):
                    return False
            for upper, lower in itertools.pairwise(rows):
                if any(upper[j] >= lower[j] for j in range(len(lower))):
                    return False
        return True

    def act(self, w: Permutation) -> BiTableau:
        """Replace every entry a by (a)w."""

        def move(rows: Rows) -> Rows:
            return tuple(tuple(w(a) for a in row) for row in rows)

        return BiTableau(move(self.first), move(self.second))

    def position(self, a: int) -> tuple[int, int, int]:
        """(component, row, column), 1-based component, 0-based row/column."""
        for comp, rows in ((1, self.first), (2, self.second)):
            for i, row in enumerate(rows):
                if a in row:
                    return comp, i, row.index(a)
        raise ParameterError(f"entry {a} not in tableau")

    def to_json(self) -> list[list[list[int]]]:
        return [[list(row) for row in self.first], [list(row) for row in self.second]]


def _fill(shape: Partition, entries: Iterator[int], by_columns: bool) -> Rows:
    rows = [[0] * p for p in shape.parts]
    cells = shape.cells()
    if by_columns:
        cells = sorted(cells, key=lambda c: (c[1], c[0]))
    for i, j in cells:
        rows[i][j] = next(entries)
    return tuple(tuple(row) for row in rows)


def initial_tableau(lam: Bipartition) -> BiTableau:
    """𝔱^λ: 1..r along rows, first component then second."""
    entries = iter(range(1, lam.size + 1))
    first = _fill(lam.first, entries, by_columns=False)
    return BiTableau(first, _fill(lam.second, entries, by_columns=False))


def final_tableau(lam: Bipartition) -> BiTableau:
    """𝔱_λ: 1..r down columns, second component first."""
    entries = iter(range(1, lam.size + 1))
    second = _fill(lam.second, entries, by_columns=True)
    return BiTableau(_fill(lam.first, entries, by_columns=True), second)


def _standard_fillings(shape: tuple[int, ...], entries: tuple[int, ...]) -> list[Rows]:
    if not entries:
        return [tuple(() for _ in shape)]
    largest, rest = entries[-1], entries[:-1]
    out: list[Rows] = []
    for i, row in enumerate(shape):
        if row and (i + 1 == len(shape) or shape[i + 1] < row):
            smaller = shape[:i] + (row - 1,) + shape[i + 1 :]
            for rows in _standard_fillings(smaller, rest):
                out.append(rows[:i] + (rows[i] + (largest,),) + rows[i + 1 :])
    return out


@cache
def standard_tableaux(lam: Bipartition) -> tuple[BiTableau, ...]:
    """Std(λ), ordered lexicographically by row-reading word; 𝔱^λ comes first."""
    r, a = lam.size, lam.first.size
    out: list[BiTableau] = []
    for chosen in itertools.combinations(range(1, r + 1), a):
        rest = tuple(sorted(set(range(1, r + 1)) - set(chosen)))
        for first in _standard_fillings(lam.first.parts, chosen):
            for second in _standard_fillings(lam.second.parts, rest):
                out.append(BiTableau(first, second))
    out.sort(key=BiTableau.reading_word)
    return tuple(out)


def tableau_perm(t: BiTableau) -> Permutation:
    """d(𝔱): the permutation w with 𝔱^λ w = 𝔱."""
    if not t.standard:
        raise ParameterError(f"tableau {t.to_json()} is not standard")
    start = initial_tableau(t.shape)
    images = [0] * t.shape.size
    for a, b in zip(start.reading_word(), t.reading_word(), strict=True):
        images[a - 1] = b
    return Permutation(tuple(images))


def w_lambda(lam: Bipartition) -> Permutation:
    """w_λ = d(𝔱_λ)."""
    return tableau_perm(final_tableau(lam))


# --- coset representatives -----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CosetDatum:
    """A coset element c = top × bar, its generator word, and a κ-choice on its moved indices."""

    top: Permutation
    bar: Permutation
    word: tuple[tuple[str, int], ...]  # ("s", i) / ("sbar", j) in algebra order
    moved: tuple[int, ...]  # the i-indices that κ may be supported on
    kappa: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "top": self.top.to_json(),
            "bar": self.bar.to_json(),
            "moved": list(self.moved),
            "kappa": list(self.kappa),
        }


CosetWord = tuple[tuple[str, int], ...]


def _coset_word(pairs: Sequence[tuple[int, int, int, int]]) -> CosetWord:
    word: list[tuple[str, int]] = []
    for a, i, b, j in pairs:
        word.extend(("s", x) for x in s_range(a, i))
        word.extend(("sbar", x) for x in s_range(b, j))
    return tuple(word)


@cache
def coset_elements(r: int, t: int, f: int, flavor: str) -> tuple[tuple[CosetWord, tuple[int, ...]], ...]:
    """(word, moved i-indices) for every element of 𝒟^f (head) or 𝒟^f_{r,t} (tail)."""
    if not 0 <= f <= min(r, t):
        raise ParameterError(f"f={f} out of range for (r,t)=({r},{t})")
    if flavor not in ("head", "tail"):
        raise ParameterError(f"unknown coset flavor {flavor!r}")
    out = []
    for i_seq in itertools.combinations(range(1, r + 1), f):
        if flavor == "head":
            # s_{f,i_f} s̄_{f,j_f} ⋯ s_{1,i_1} s̄_{1,j_1}, i_1 < ⋯ < i_f, k ≤ j_k ≤ t
            ranges = [range(k, t + 1) for k in range(1, f + 1)]
            for j_seq in itertools.product(*ranges):
                pairs = [(k, i_seq[k - 1], k, j_seq[k - 1]) for k in range(f, 0, -1)]
                out.append((_coset_word(pairs), i_seq))
        else:
            # s_{r−f+1,i_{r−f+1}} s̄_{t−f+1,j_{t−f+1}} ⋯ s_{r,i_r} s̄_{t,j_t}, i increasing with k, j_k ≥ k+f−t
            ks = list(range(t - f + 1, t + 1))
            ranges = [range(k + f - t, t + 1) for k in ks]
            for j_seq in itertools.product(*ranges):
                pairs = [(r - f + 1 + n, i_seq[n], ks[n], j_seq[n]) for n in range(f)]
                out.append((_coset_word(pairs), i_seq))
    return tuple(out)


def coset_reps(r: int, t: int, f: int, flavor: str = "tail") -> list[CosetDatum]:
    """Every coset element paired with each κ ∈ {0,1}^r supported on its moved indices."""
    data: list[CosetDatum] = []
    for word, moved in coset_elements(r, t, f, flavor):
        top = Permutation.from_word([i for g, i in word if g == "s"], r)
        bar = Permutation.from_word([j for g, j in word if g == "sbar"], t, barred=True)
        for bits in itertools.product((0, 1), repeat=len(moved)):
            kappa = [0] * r
            for i, b in zip(moved, bits, strict=True):
                kappa[i - 1] = b
            data.append(CosetDatum(top, bar, word, tuple(moved), tuple(kappa)))
    return data
