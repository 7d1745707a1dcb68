"""The gl(m|n) matrix model M_pq^{rt} = V^{⊗r} ⊗ K_{λpq} ⊗ W^{⊗t} and the right action of 𝓑_{2,r,t}.

A basis vector is a key (𝐢, σ, 𝐣). 𝐢[k−1] is the index on the k-th V strand; strand 1 sits
next to the Kac module. σ is the sorted tuple of odd lowering operators E_{m+i,j} applied to
v_pq, at row-major positions (i−1)·m + (j−1). 𝐣[k−1] is the index on the k-th W strand. Left
to right, the tensor factors are strand r, …, strand 1, K, strand 1̄, …, strand t̄.

gl(m|n) acts on the left by super-derivations. 𝓑 acts on the right through the Casimir
tensor Ω = Σ (−1)^{[j]} E_ij ⊗ E_ji placed on pairs of factors. Operators are stored as the
images of basis keys, and `a * b` applies a first.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from cyclobrauer import diagrams, linalg
from cyclobrauer.algebra import AlgebraElement, Monomial, WalledBrauerAlgebra, _acc
from cyclobrauer.cellular import CellIndex, WalledCellularBasis, delta, lambda_poset
from cyclobrauer.combinatorics import Partition, Permutation, coset_reps, standard_tableaux, tableau_perm, w_lambda
from cyclobrauer.diagrams import Generator
from cyclobrauer.errors import ParameterError, VerificationError
from cyclobrauer.params import Parameters, typical
from cyclobrauer.report import Report
from cyclobrauer.weightdiag import SuperWeight, triple_to_weight

log = logging.getLogger(__name__)

Key = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
Vector = dict[Key, Fraction]

MAX_COMMUTANT_UNKNOWNS = 250_000


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _lower(pos: int, terms: Mapping[tuple[int, ...], Fraction]) -> dict[tuple[int, ...], Fraction]:
    """F_pos · b^w: zero if pos ∈ w, else sorted into place with the sign of the odd moves."""
    out: dict[tuple[int, ...], Fraction] = {}
    for w, c in terms.items():
        if pos in w:
            continue
        sign = _sign(sum(1 for x in w if x < pos))
        _acc(out, {tuple(sorted((*w, pos))): c * sign})
    return out


class SparseOperator:
    """A linear map on M given by the images of basis keys."""

    __slots__ = ("images",)

    def __init__(self, images: Mapping[Key, Mapping[Key, Fraction]]):
        self.images = {k: dict(v) for k, v in images.items() if v}

    def apply(self, vec: Mapping[Key, Fraction]) -> Vector:
        out: Vector = {}
        for key, c in vec.items():
            image = self.images.get(key)
            if image:
                _acc(out, image, c)
        return out

    def __mul__(self, other: SparseOperator | Fraction | int) -> SparseOperator:
        if isinstance(other, SparseOperator):
            return SparseOperator({k: other.apply(v) for k, v in self.images.items()})
        c = Fraction(other)
        return SparseOperator({k: {b: c * v for b, v in img.items()} for k, img in self.images.items()} if c else {})

    def __rmul__(self, other: Fraction | int) -> SparseOperator:
        return self * other

    def __add__(self, other: SparseOperator) -> SparseOperator:
        out = {k: dict(v) for k, v in self.images.items()}
        for k, v in other.images.items():
            _acc(out.setdefault(k, {}), v)
        return SparseOperator(out)

    def __neg__(self) -> SparseOperator:
        return self * -1

    def __sub__(self, other: SparseOperator) -> SparseOperator:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.images

    def ratio(self, other: SparseOperator) -> Fraction | None:
        """c with self = c·other, or None."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        key, image = next(iter(other.images.items()))
        col, value = next(iter(image.items()))
        c = self.images.get(key, {}).get(col, Fraction(0)) / value
        return c if self == other * c else None

    def flat(self, index: Mapping[Key, int]) -> dict[int, Fraction]:
        size = len(index)
        return {index[k] * size + index[b]: v for k, img in self.images.items() for b, v in img.items()}

    def to_json(self, index: Mapping[Key, int]) -> list[list]:
        return [[index[k], index[b], str(v)] for k, img in self.images.items() for b, v in sorted(img.items())]


class SuperModule:
    """M_pq^{rt} for a typical λ_pq."""

    def __init__(
        self,
        m: int,
        n: int,
        p: Fraction | int,
        q: Fraction | int,
        r: int,
        t: int,
        *,
        max_dim: int = 300_000,
    ):
        if m < 1 or n < 1:
            raise ParameterError(f"gl(m|n) needs m, n ≥ 1, got ({m}|{n})")
        if r < 0 or t < 0:
            raise ParameterError(f"r and t must be non-negative, got ({r},{t})")
        self.m, self.n, self.r, self.t = m, n, r, t
        self.p, self.q = Fraction(p), Fraction(q)
        if not typical(m, n, self.p, self.q):
            raise ParameterError(
                f"λ_pq is atypical for gl({m}|{n}): p−q = {self.p - self.q} must be non-integral, ≤ −{m} or ≥ {n}"
            )
        self.dimension = (m + n) ** (r + t) * 2 ** (m * n)
        if self.dimension > max_dim:
            raise ParameterError(f"M_pq^({r},{t}) has dimension {self.dimension} > max_module_dim={max_dim}")
        self.params = Parameters.schur_weyl(m, n, self.p, self.q)
        self._kac_memo: dict[tuple[int, int, tuple[int, ...]], dict[tuple[int, ...], Fraction]] = {}
        self._images: dict[Generator, dict[Key, Vector]] = {}
        log.info("M_pq^(%d,%d) for gl(%d|%d): dimension %d", r, t, m, n, self.dimension)

    def __repr__(self) -> str:
        return f"SuperModule(m={self.m}, n={self.n}, p={self.p}, q={self.q}, r={self.r}, t={self.t})"

    @cached_property
    def algebra(self) -> WalledBrauerAlgebra:
        return WalledBrauerAlgebra(self.params, self.r, self.t)

    @cached_property
    def cellular(self) -> WalledCellularBasis:
        return WalledCellularBasis(self.algebra)

    def parity(self, i: int) -> int:
        return int(i > self.m)

    def _highest(self, a: int) -> Fraction:
        return self.p if a <= self.m else -self.q

    # --- basis and weights ----------------------------------------------------------------------

    @cached_property
    def basis(self) -> list[Key]:
        labels = range(1, self.m + self.n + 1)
        words = [w for size in range(self.m * self.n + 1) for w in combinations(range(self.m * self.n), size)]
        return [
            (vs, w, ws)
            for vs in product(labels, repeat=self.r)
            for w in words
            for ws in product(labels, repeat=self.t)
        ]

    @cached_property
    def index(self) -> dict[Key, int]:
        return {key: i for i, key in enumerate(self.basis)}

    def weight(self, key: Key) -> SuperWeight:
        m = self.m
        coords = [self.p] * m + [-self.q] * self.n
        vs, word, ws = key
        for i in vs:
            coords[i - 1] += 1
        for j in ws:
            coords[j - 1] -= 1
        for pos in word:
            i, j = divmod(pos, m)
            coords[m + i] += 1
            coords[j] -= 1
        return SuperWeight(tuple(coords[:m]), tuple(coords[m:]))

    @cached_property
    def weight_spaces(self) -> dict[SuperWeight, list[Key]]:
        out: dict[SuperWeight, list[Key]] = {}
        for key in self.basis:
            out.setdefault(self.weight(key), []).append(key)
        return out

    def random_vector(self, rng: random.Random) -> Vector:
        return {key: Fraction(rng.choice((-1, 1)) * rng.randint(1, 9)) for key in self.basis}

    # --- gl(m|n) --------------------------------------------------------------------------------

    def _kac(self, a: int, b: int, word: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        """E_ab · b^word inside K_{λpq}."""
        memo = (a, b, word)
        hit = self._kac_memo.get(memo)
        if hit is not None:
            return hit
        m = self.m
        pa, pb = self.parity(a), self.parity(b)
        if pa and not pb:
            out = _lower((a - m - 1) * m + (b - 1), {word: Fraction(1)})
        elif not word:
            out = {(): self._highest(a)} if a == b and self._highest(a) else {}
        else:
            # E·F·R = [E,F]·R + (−1)^{|E|} F·E·R
            first, rest = word[0], word[1:]
            c, d = m + first // m + 1, first % m + 1
            e = (pa + pb) % 2
            out = {}
            if b == c:
                _acc(out, self._kac(a, d, rest))
            if d == a:
                _acc(out, self._kac(c, b, rest), -_sign(e))
            _acc(out, _lower(first, self._kac(a, b, rest)), _sign(e))
        self._kac_memo[memo] = out
        return out

    def _parities(self, key: Key) -> list[int]:
        vs, word, ws = key
        return [self.parity(i) for i in reversed(vs)] + [len(word) % 2] + [self.parity(j) for j in ws]

    def _act_at(self, key: Key, pos: int, a: int, b: int) -> Vector:
        """E_ab on the factor at `pos`, without the Koszul sign."""
        vs, word, ws = key
        r = self.r
        if pos < r:
            k = r - pos - 1
            if vs[k] != b:
                return {}
            return {(vs[:k] + (a,) + vs[k + 1 :], word, ws): Fraction(1)}
        if pos == r:
            return {(vs, w, ws): c for w, c in self._kac(a, b, word).items()}
        k = pos - r - 1
        if ws[k] != a:
            return {}
        pa = self.parity(a)
        return {(vs, word, ws[:k] + (b,) + ws[k + 1 :]): Fraction(-_sign(pa * (pa + self.parity(b))))}

    def apply_root(self, a: int, b: int, vec: Mapping[Key, Fraction]) -> Vector:
        """E_ab · vec."""
        e = (self.parity(a) + self.parity(b)) % 2
        out: Vector = {}
        for key, c in vec.items():
            before = 0
            for pos, par in enumerate(self._parities(key)):
                _acc(out, self._act_at(key, pos, a, b), c * _sign(e * before))
                before += par
        return out

    def root_operator(self, a: int, b: int) -> SparseOperator:
        return SparseOperator({key: self.apply_root(a, b, {key: Fraction(1)}) for key in self.basis})

    def casimir(self, key: Key, first: int, second: int) -> Vector:
        """π_{first,second}(Ω) on one basis vector; positions count factors from the left."""
        parities = self._parities(key)
        before = sum(parities[:first]) + sum(parities[:second])
        out: Vector = {}
        labels = range(1, self.m + self.n + 1)
        for i in labels:
            for j in labels:
                image = self._act_at(key, first, i, j)
                if not image:
                    continue
                e = (self.parity(i) + self.parity(j)) % 2
                coeff = _sign(self.parity(j) + e * before)
                for k1, c1 in image.items():
                    _acc(out, self._act_at(k1, second, j, i), c1 * coeff)
        return out

    # --- the right action of 𝓑 ---------------------------------------------------------------------

    def generators(self) -> list[Generator]:
        gens: list[Generator] = [("s", i) for i in range(1, self.r)]
        gens += [("sbar", j) for j in range(1, self.t)]
        if self.r:
            gens.append(("x", 1))
        if self.t:
            gens.append(("xbar", 1))
        if self.r and self.t:
            gens.append(("e", 1))
        return gens

    def _image(self, g: Generator, key: Key) -> Vector:
        kind, i = g
        r = self.r
        if kind == "s":
            return self.casimir(key, r - i - 1, r - i)
        if kind == "sbar":
            return self.casimir(key, r + i, r + i + 1)
        if kind == "x":
            pair = (r - 1, r)
        elif kind == "xbar":
            pair = (r, r + 1)
        else:
            pair = (r - 1, r + 1)
        return {k: -c for k, c in self.casimir(key, *pair).items()}

    def _check(self, g: Generator) -> None:
        kind, i = g
        bound = {"s": self.r - 1, "sbar": self.t - 1, "x": self.r, "xbar": self.t}.get(kind)
        if kind == "e":
            if i != 1 or not (self.r and self.t):
                raise ParameterError(f"e{i} does not act on M_pq^({self.r},{self.t})")
        elif bound is None or not 1 <= i <= bound:
            raise ParameterError(f"generator {kind}{i} does not act on M_pq^({self.r},{self.t})")

    def act(self, vec: Mapping[Key, Fraction], g: Generator) -> Vector:
        """vec · g."""
        kind, i = g
        if kind in ("x", "xbar") and i > 1:
            # x_{i} = s_{i−1} x_{i−1} s_{i−1} − s_{i−1}, and the same on the barred side
            s = ("s" if kind == "x" else "sbar", i - 1)
            sv = self.act(vec, s)
            return _acc(self.act(self.act(sv, (kind, i - 1)), s), sv, -1)
        images = self._images.get(g)
        if images is None:
            self._check(g)
            images = self._images[g] = {}
        out: Vector = {}
        for key, c in vec.items():
            image = images.get(key)
            if image is None:
                image = images[key] = self._image(g, key)
            _acc(out, image, c)
        return out

    def act_word(self, vec: Mapping[Key, Fraction], word: Iterable[Generator]) -> Vector:
        out = dict(vec)
        for g in word:
            out = self.act(out, g)
        return out

    def act_monomial(self, vec: Mapping[Key, Fraction], mono: Monomial) -> Vector:
        """vec · x^α·D·x̄^β."""
        out = dict(vec)
        for i, a in enumerate(mono.alpha, 1):
            for _ in range(a):
                out = self.act(out, ("x", i))
        out = self.act_word(out, diagrams.diagram_word(mono.diagram))
        for j, b in enumerate(mono.beta, 1):
            for _ in range(b):
                out = self.act(out, ("xbar", j))
        return out

    def act_element(self, vec: Mapping[Key, Fraction], a: AlgebraElement) -> Vector:
        out: Vector = {}
        for mono, c in a.terms.items():
            _acc(out, self.act_monomial(vec, mono), c)
        return out

    def operator(self, fn) -> SparseOperator:
        return SparseOperator({key: fn({key: Fraction(1)}) for key in self.basis})

    def generator_operator(self, g: Generator) -> SparseOperator:
        return self.operator(lambda v: self.act(v, g))

    def monomial_operator(self, mono: Monomial) -> SparseOperator:
        return self.operator(lambda v: self.act_monomial(v, mono))

    def element_operator(self, a: AlgebraElement) -> SparseOperator:
        return self.operator(lambda v: self.act_element(v, a))

    def x_prime(self, vec: Mapping[Key, Fraction], k: int) -> Vector:
        """vec · (x_k + Σ_{j<k} (j,k))."""
        out = self.act(vec, ("x", k))
        for j in range(1, k):
            word = [("s", i) for i in Permutation.transposition(j, k, self.r).reduced_word()]
            _acc(out, self.act_word(vec, word))
        return out

    def xbar_prime(self, vec: Mapping[Key, Fraction], k: int) -> Vector:
        out = self.act(vec, ("xbar", k))
        for j in range(1, k):
            word = [("sbar", i) for i in Permutation.transposition(j, k, self.t).reduced_word()]
            _acc(out, self.act_word(vec, word))
        return out


def glmn_action(module: SuperModule, a: int, b: int, vec: Mapping[Key, Fraction]) -> Vector:
    return module.apply_root(a, b, vec)


def casimir_operator(module: SuperModule, g: Generator) -> SparseOperator:
    """The operator of s_i, s̄_j, x₁, x̄₁ or e₁ on M."""
    return module.generator_operator(g)


# --- rank of φ and the commutant -------------------------------------------------------------------


@dataclass(frozen=True)
class PhiRank:
    dimension: int
    rank: int
    kernel: list[AlgebraElement]
    probabilistic: bool  # False when the probe rank had to be redone exactly

    @property
    def injective(self) -> bool:
        return self.rank == self.dimension

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "rank": self.rank,
            "kernel": [str(a) for a in self.kernel],
            "probabilistic": self.probabilistic,
        }


def phi_rank(module: SuperModule, *, seed: int = 0, probes: int = 2) -> PhiRank:
    """Rank of φ: 𝓑_{2,r,t} → End(M), from random probe vectors, with the kernel certified exactly."""
    alg = module.algebra
    monomials = alg.basis()
    rng = random.Random(seed)
    vectors = [module.random_vector(rng) for _ in range(probes)]
    size = module.dimension
    index = module.index
    rows = []
    for mono in monomials:
        row: dict[int, Fraction] = {}
        for k, v in enumerate(vectors):
            for key, c in module.act_monomial(v, mono).items():
                row[k * size + index[key]] = c
        rows.append(row)
    kernel = linalg.left_nullspace(rows, probes * size)
    elements = [alg.element({mono: c for mono, c in zip(monomials, coeffs, strict=True) if c}) for coeffs in kernel]
    probabilistic = all(module.element_operator(a).is_zero() for a in elements)
    if not probabilistic:
        log.warning("probe rank of φ was too small; recomputing from full operators")
        rows = [module.monomial_operator(mono).flat(index) for mono in monomials]
        kernel = linalg.left_nullspace(rows, size * size)
        elements = [
            alg.element({mono: c for mono, c in zip(monomials, coeffs, strict=True) if c}) for coeffs in kernel
        ]
    return PhiRank(len(monomials), len(monomials) - len(elements), elements, probabilistic)


def _chevalley(m: int, n: int) -> list[tuple[int, int]]:
    return [pair for i in range(1, m + n) for pair in ((i, i + 1), (i + 1, i))]


def commutant_dim(module: SuperModule) -> int:
    """dim {X ∈ End(M) : X commutes with every Chevalley generator}; X is block-diagonal by weight."""
    block_of: dict[Key, list[Key]] = {}
    unknowns: dict[tuple[Key, Key], int] = {}
    for keys in module.weight_spaces.values():
        for u in keys:
            block_of[u] = keys
            for v in keys:
                unknowns[(u, v)] = len(unknowns)
    if len(unknowns) > MAX_COMMUTANT_UNKNOWNS:
        raise ParameterError(f"commutant of M_pq^({module.r},{module.t}) has {len(unknowns)} unknowns")
    log.info("commutant: %d unknowns over %d weight spaces", len(unknowns), len(module.weight_spaces))
    rows: list[dict[int, Fraction]] = []
    for a, b in _chevalley(module.m, module.n):
        rho = {u: module.apply_root(a, b, {u: Fraction(1)}) for u in module.basis}
        for u in module.basis:
            # (E·X − X·E)(u) at each output coordinate y
            eq: dict[Key, dict[int, Fraction]] = {}
            for v in block_of[u]:
                for y, c in rho[v].items():
                    _acc(eq.setdefault(y, {}), {unknowns[(u, v)]: c})
            for w, c in rho[u].items():
                for z in block_of[w]:
                    _acc(eq.setdefault(z, {}), {unknowns[(w, z)]: -c})
            rows.extend(row for row in eq.values() if row)
    return len(unknowns) - linalg.rank(rows, len(unknowns))


# --- highest weight vectors -----------------------------------------------------------------------


def hwv_kernel_oracle(module: SuperModule, weight: SuperWeight) -> int:
    """dim {v ∈ M_weight : E_{i,i+1}·v = 0 for every simple root}."""
    keys = module.weight_spaces.get(weight, [])
    if not keys:
        return 0
    rows: dict[tuple[int, Key], dict[int, Fraction]] = {}
    for col, u in enumerate(keys):
        for i in range(1, module.m + module.n):
            for y, c in module.apply_root(i, i + 1, {u: Fraction(1)}).items():
                rows.setdefault((i, y), {})[col] = c
    return len(keys) - linalg.rank(list(rows.values()), len(keys))


def _filled(lam: Partition, label) -> list[int]:
    return [label(i) for i, row in enumerate(lam.parts, 1) for _ in range(row)]


def seed_vector(module: SuperModule, index: CellIndex) -> Key:
    """v_λ: strands listed outward from the Kac module, the f capped pairs outermost."""
    m, n = module.m, module.n
    mu, nu = index.mu, index.nu
    if len(mu.first) + len(nu.first) > m or len(mu.second) + len(nu.second) > n:
        raise ParameterError(f"{index} does not fit gl({m}|{n})")
    left = _filled(mu.first, lambda i: i) + _filled(mu.second, lambda i: m + i) + [1] * index.f
    right = _filled(nu.second, lambda i: m + n - i + 1) + _filled(nu.first, lambda i: m - i + 1) + [1] * index.f
    return (tuple(left), (), tuple(right))


def _pad(w: Permutation, n: int, barred: bool = False) -> Permutation:
    return Permutation(w.images + tuple(range(w.n + 1, n + 1)), barred=barred)


def hwv_construct(module: SuperModule, index: CellIndex) -> list[Vector]:
    """v_λ·𝔢^f·w_{μ,ν}·𝔶_{μ′}·𝔶̄_{(ν^o)′}·d(𝔱)·d·x^{κ_d}, one vector per (𝔱, d, κ_d)."""
    r, t, f = module.r, module.t, index.f
    alg = module.algebra
    cb = module.cellular
    mu, nu = index.mu, index.nu
    vec: Vector = {seed_vector(module, index): Fraction(1)}
    if f:
        vec = module.act_word(vec, diagrams.frak_e_word(r, t, f))
    w = alg.permutation(top=_pad(w_lambda(mu), r), bar=_pad(w_lambda(nu.swap()), t, barred=True))
    vec = module.act_element(vec, w)
    if r > f:
        y = cb.hecke_side(r - f, False).cell_generator("S2", mu.dual())
        vec = module.act_element(vec, cb.push(y.terms, r - f, False))
    if t > f:
        ybar = cb.hecke_side(t - f, True).cell_generator("S4", nu.swap().dual())
        vec = module.act_element(vec, cb.push(ybar.terms, t - f, True))
    out = []
    for t1 in standard_tableaux(mu.dual()):
        for t2 in standard_tableaux(nu.swap().dual()):
            d_t = alg.permutation(top=_pad(tableau_perm(t1), r), bar=_pad(tableau_perm(t2), t, barred=True))
            base = module.act_element(vec, d_t)
            for c in coset_reps(r, t, f, "tail"):
                v = module.act_word(base, c.word)
                out.append(module.act_monomial(v, Monomial(c.kappa, diagrams.identity(r, t), (0,) * t)))
    return out


def certify_hwv(module: SuperModule, index: CellIndex, vectors: Sequence[Vector]) -> SuperWeight:
    """Raise VerificationError unless the vectors are independent highest weight vectors of weight λ̄."""
    weight = triple_to_weight(index, module.p, module.q, module.m, module.n)
    for v in vectors:
        if not v:
            raise VerificationError(f"highest weight vector for {index} vanished")
        if any(module.weight(key) != weight for key in v):
            raise VerificationError(f"vector for {index} is not of weight {weight}")
        for i in range(1, module.m + module.n):
            if module.apply_root(i, i + 1, v):
                raise VerificationError(f"E_{i},{i + 1} does not kill a vector for {index}")
    index_of = module.index
    rows = [{index_of[k]: c for k, c in v.items()} for v in vectors]
    if linalg.rank(rows, module.dimension) != len(vectors):
        raise VerificationError(f"highest weight vectors for {index} are dependent")
    return weight


@dataclass(frozen=True)
class HomKac:
    index: CellIndex
    weight: SuperWeight
    constructed: int
    oracle: int
    cell_dimension: int
    action_match: bool

    @property
    def consistent(self) -> bool:
        return self.constructed == self.oracle == self.cell_dimension and self.action_match

    def to_json(self) -> dict:
        return {
            "index": self.index.to_json(),
            "weight": self.weight.to_json(),
            "constructed": self.constructed,
            "oracle": self.oracle,
            "cell_dimension": self.cell_dimension,
            "action_match": self.action_match,
        }


def _action_matrices(module: SuperModule, vectors: Sequence[Vector]) -> dict[str, list[list[Fraction]]]:
    index_of = module.index
    span = linalg.RowSpan([{index_of[k]: c for k, c in v.items()} for v in vectors], module.dimension)
    out = {}
    size = len(vectors)
    for name, g in module.cellular.generators():
        matrix = []
        for v in vectors:
            image = module.act_element(v, g)
            coords = span.coordinates({index_of[k]: c for k, c in image.items()})
            if coords is None:
                raise VerificationError(f"{name} moves a highest weight vector out of its weight space")
            matrix.append([coords.get(j, Fraction(0)) for j in range(size)])
        out[name] = matrix
    return out


def _isomorphic(
    left: Mapping[str, list[list[Fraction]]], right: Mapping[str, list[list[Fraction]]], size: int, seed: int
) -> bool:
    """Whether some invertible T has A_g·T = T·B_g for every generator g."""
    rows: list[dict[int, Fraction]] = []
    for name, a in left.items():
        b = right[name]
        for i in range(size):
            for j in range(size):
                row: dict[int, Fraction] = {}
                for ell in range(size):
                    if a[i][ell]:
                        _acc(row, {ell * size + j: a[i][ell]})
                    if b[ell][j]:
                        _acc(row, {i * size + ell: -b[ell][j]})
                if row:
                    rows.append(row)
    homs = linalg.nullspace(rows, size * size)
    if not homs:
        return False
    rng = random.Random(seed)
    for _ in range(8):
        flat = [sum((rng.randint(-9, 9) * h[k] for h in homs), Fraction(0)) for k in range(size * size)]
        if linalg.det([flat[i * size : (i + 1) * size] for i in range(size)]):
            return True
    return False


def hom_kac_dim(module: SuperModule, index: CellIndex, *, seed: int = 0) -> HomKac:
    """dim Hom(K(λ̄), M) and whether the 𝓑-action on the highest weight vectors is the cell module."""
    vectors = hwv_construct(module, index)
    weight = certify_hwv(module, index, vectors)
    oracle = hwv_kernel_oracle(module, weight)
    dual = CellIndex(index.f, index.mu.dual(), index.nu.swap().dual())
    cell = module.cellular.cell_module(dual)
    match = False
    if cell.dimension == len(vectors):
        match = _isomorphic(_action_matrices(module, vectors), cell.action, len(vectors), seed)
    return HomKac(index, weight, len(vectors), oracle, cell.dimension, match)


# --- reports ---------------------------------------------------------------------------------------------


def _omega_check(module: SuperModule, vectors: Sequence[Vector], g: Generator, a: int, value: Fraction) -> bool:
    e = ("e", 1)
    for v in vectors:
        ve = module.act(v, e)
        lhs = ve
        for _ in range(a):
            lhs = module.act(lhs, g)
        lhs = module.act(lhs, e)
        if lhs != _acc({}, ve, value):
            return False
    return True


def _polynomial_vanishes(module: SuperModule, vectors: Sequence[Vector], g: Generator, coeffs) -> bool:
    for v in vectors:
        total: Vector = {}
        power = dict(v)
        for c in coeffs:
            _acc(total, power, c)
            power = module.act(power, g)
        if total:
            return False
    return True


def presentation_report(module: SuperModule, *, seed: int = 0, probes: int = 2) -> Report:
    """The relations of 𝓑_{2,r,t} and of gl(m|n), checked as operators on random probe vectors."""
    m, n, r, t = module.m, module.n, module.r, module.t
    report = Report(f"matrix model gl({m}|{n}) p={module.p} q={module.q} (r,t)=({r},{t})")
    rng = random.Random(seed)
    vectors = [module.random_vector(rng) for _ in range(probes)]
    alg = module.algebra
    params = module.params

    total = bad = 0
    for g in module.generators():
        left = alg.normalize([g])
        for mono in alg.basis():
            prod = left * alg.element({mono: Fraction(1)})
            for v in vectors:
                total += 1
                if module.act_monomial(module.act(v, g), mono) != module.act_element(v, prod):
                    bad += 1
                    log.debug("φ(%s)φ(%s) ≠ φ(%s·%s)", g, mono, g, mono)
    report.add(bad == 0, "homomorphism", f"{total - bad}/{total} products g·m agree with their operators")

    if r:
        report.add(_polynomial_vanishes(module, vectors, ("x", 1), params.f_coeffs), "f(x1) = 0", f"roots {params.u}")
    if t and params.ubar is not None:
        report.add(
            _polynomial_vanishes(module, vectors, ("xbar", 1), params.g_coeffs), "g(xbar1) = 0", f"roots {params.ubar}"
        )
    if r and t:
        for a, value in enumerate(params.omega_sequence(4)):
            report.add(_omega_check(module, vectors, ("x", 1), a, value), f"e1 x1^{a} e1 = ω{a} e1", f"ω{a} = {value}")
        for a, value in enumerate(params.bar_omega_sequence(3)):
            report.add(
                _omega_check(module, vectors, ("xbar", 1), a, value), f"e1 xb1^{a} e1 = ω̄{a} e1", f"ω̄{a} = {value}"
            )

    jm_ok = True
    for v in vectors:
        for k in range(1, r + 1):
            jm_ok &= module.x_prime(v, k) == _neg_casimir(module, v, r - k, r)
        for k in range(1, t + 1):
            jm_ok &= module.xbar_prime(v, k) == _neg_casimir(module, v, r, r + k)
    report.add(jm_ok, "Jucys–Murphy", "x′_k = −π_{k,0}(Ω) and x̄′_k = −π_{0,k̄}(Ω)")

    labels = range(1, m + n + 1)
    bimodule = all(
        module.act(module.apply_root(a, b, v), g) == module.apply_root(a, b, module.act(v, g))
        for g in module.generators()
        for a in labels
        for b in labels
        for v in vectors[:1]
    )
    report.add(bimodule, "bimodule", "every generator commutes with every E_ab")

    brackets = 0
    v = vectors[0]
    for a, b, c, d in product(labels, repeat=4):
        sign = _sign((module.parity(a) + module.parity(b)) * (module.parity(c) + module.parity(d)))
        lhs = _acc(
            module.apply_root(a, b, module.apply_root(c, d, v)), module.apply_root(c, d, module.apply_root(a, b, v)), -sign
        )
        rhs: Vector = {}
        if b == c:
            _acc(rhs, module.apply_root(a, d, v))
        if d == a:
            _acc(rhs, module.apply_root(c, b, v), -sign)
        brackets += lhs != rhs
    report.add(brackets == 0, "gl(m|n) brackets", f"{brackets} of {(m + n) ** 4} supercommutators disagree")

    report.extend(eigenvalue_report(module))
    report.data = {"m": m, "n": n, "p": str(module.p), "q": str(module.q), "r": r, "t": t, "dim": module.dimension}
    return report


def _neg_casimir(module: SuperModule, vec: Mapping[Key, Fraction], first: int, second: int) -> Vector:
    """−π_{first,second}(Ω)·vec."""
    out: Vector = {}
    for key, c in vec.items():
        _acc(out, module.casimir(key, first, second), -c)
    return out


def eigenvalue_report(module: SuperModule) -> Report:
    """x′_k acts by −p on v_𝐢⊗v_pq⊗v̄_𝐣 when i_k is even, x̄′_k by q when j_k is odd."""
    report = Report("Jucys–Murphy eigenvalues")
    m, r, t = module.m, module.r, module.t
    bad = checked = 0
    for key in module.basis:
        vs, word, ws = key
        if word:
            continue
        v = {key: Fraction(1)}
        for k in range(1, r + 1):
            if vs[k - 1] <= m:
                checked += 1
                bad += module.x_prime(v, k) != {key: -module.p}
            else:
                # x′_k + q lands on vectors with a lowered Kac part
                checked += 1
                residual = _acc(module.x_prime(v, k), v, module.q)
                bad += any(not w for _, w, _ in residual)
        for k in range(1, t + 1):
            if ws[k - 1] > m:
                checked += 1
                bad += module.xbar_prime(v, k) != {key: module.q}
    report.add(bad == 0, "x′ eigenvalues", f"{checked - bad}/{checked} strands act as predicted")
    return report


def hwv_report(module: SuperModule, *, seed: int = 0) -> Report:
    """Highest weight vectors against the kernel oracle and the cell modules, for r + t ≤ min(m, n)."""
    report = Report(f"highest weight vectors gl({module.m}|{module.n}) (r,t)=({module.r},{module.t})")
    if module.r + module.t > min(module.m, module.n):
        report.add(False, "range", "needs r + t ≤ min(m, n)", warn_only=True)
        return report
    rows = []
    for index in lambda_poset(module.r, module.t):
        try:
            hom = hom_kac_dim(module, index, seed=seed)
        except VerificationError as exc:
            report.add(False, str(index), str(exc))
            continue
        expected = len(delta(CellIndex(index.f, index.mu.dual(), index.nu.swap().dual()), module.r, module.t))
        report.add(
            hom.consistent and hom.constructed == expected,
            str(index),
            f"weight {hom.weight}: {hom.constructed} built, oracle {hom.oracle}, cell {hom.cell_dimension}, "
            f"action {'matches' if hom.action_match else 'differs'}",
        )
        rows.append(hom.to_json())
    report.data = {"indices": rows}
    return report


def schur_weyl_report(
    module: SuperModule, *, seed: int = 0, commutant: bool = True, highest_weights: bool = True
) -> Report:
    m, n, r, t = module.m, module.n, module.r, module.t
    report = Report(f"Schur–Weyl duality gl({m}|{n}) p={module.p} q={module.q} (r,t)=({r},{t})")
    report.extend(presentation_report(module, seed=seed), "relations: ")
    rank = phi_rank(module, seed=seed)
    injective = r + t <= min(m, n)
    # beyond r + t ≤ min(m, n) the map has a kernel
    report.add(
        rank.injective if injective else rank.rank < rank.dimension and bool(rank.kernel),
        "rank φ",
        f"{rank.rank} of dim 𝓑 = {rank.dimension}" + ("" if rank.probabilistic else " (exact recount)"),
    )
    for a in rank.kernel:
        report.add(module.element_operator(a).is_zero(), "kernel", str(a))
    if commutant:
        dim = commutant_dim(module)
        report.add(dim == rank.rank, "commutant", f"dim End_gl(M) = {dim}, rank φ = {rank.rank}")
    if highest_weights and injective:
        report.extend(hwv_report(module, seed=seed), "hwv: ")
    report.data.update({"dim_module": module.dimension, "phi": rank.to_json()})
    return report
