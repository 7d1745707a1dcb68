"""Cyclotomic parameters: 𝐟, the ω and ω̄ sequences, and the derived polynomial 𝐠.

𝐟(x₁) = ∏(x₁ − u_i) = x₁^k + Σ a_i x₁^{k−i}. The seeds ω₀..ω_{k−1} are free; every later
ω_ℓ follows the admissibility recursion ω_ℓ = −(a₁ω_{ℓ−1} + ⋯ + a_kω_{ℓ−k}). The monic 𝐠 is
never an input: it is the unique polynomial with e₁𝐟(x₁) = (−1)^k e₁𝐠(x̄₁), computed by
rewriting x̄₁^a e₁ into the span of x₁^i e₁. A supplied ū is only checked against it.
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import sympy

from cyclobrauer import linalg
from cyclobrauer.config import ParamsConfig
from cyclobrauer.errors import ParameterError


def poly_from_roots(roots: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients c_0..c_k (ascending) of ∏(x − root)."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.Mul(*[x - sympy.Rational(r.numerator, r.denominator) for r in roots]), x, domain="QQ")
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return coeffs + [Fraction(0)] * (len(roots) + 1 - len(coeffs))


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction] | None:
    """Roots with multiplicity of the ascending-coefficient polynomial, or None if not all rational."""
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs))
    found = sympy.roots(sympy.Poly(expr, x), multiple=True)
    if len(found) != len(coeffs) - 1 or not all(z.is_Rational for z in found):
        return None
    return sorted(Fraction(int(z.p), int(z.q)) for z in found)


def _canon(values: Sequence[Fraction]) -> list[str]:
    return [str(Fraction(v)) for v in values]


@dataclass(frozen=True)
class Parameters:
    k: int
    u: tuple[Fraction, ...]
    omega_seed: tuple[Fraction, ...]
    ubar_given: tuple[Fraction, ...] | None = field(default=None, compare=False)
    omega_given: tuple[Fraction, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError(f"level k must be positive, got {self.k}")
        if len(self.u) != self.k:
            raise ParameterError(f"need k={self.k} roots u, got {len(self.u)}")
        if len(self.omega_seed) != self.k:
            raise ParameterError(f"need k={self.k} seeds ω₀..ω_{self.k - 1}, got {len(self.omega_seed)}")
        object.__setattr__(self, "u", tuple(Fraction(v) for v in self.u))
        object.__setattr__(self, "omega_seed", tuple(Fraction(v) for v in self.omega_seed))
        for ell, value in enumerate(self.omega_given):
            if ell >= self.k and Fraction(value) != self.omega(ell):
                raise ParameterError(
                    f"parameters are not admissible: ω_{ell} = {value} breaks the recursion "
                    f"(expected {self.omega(ell)})"
                )
        if self.ubar_given is not None:
            ubar = tuple(Fraction(v) for v in self.ubar_given)
            if len(ubar) != self.k or poly_from_roots(ubar) != self.g_coeffs:
                raise ParameterError(
                    f"ū = {_canon(ubar)} is inconsistent with 𝐟 and the ω seeds; "
                    f"𝐠 has coefficients {_canon(self.g_coeffs)}"
                )

    @classmethod
    def create(
        cls,
        u: Sequence[Fraction | int],
        omega: Sequence[Fraction | int],
        ubar: Sequence[Fraction | int] | None = None,
    ) -> Parameters:
        """Build from roots u and ω values; entries of ω past the first k are admissibility-checked."""
        k = len(u)
        omega = tuple(Fraction(w) for w in omega)
        if len(omega) < k:
            raise ParameterError(f"need at least k={k} ω values, got {len(omega)}")
        return cls(
            k=k,
            u=tuple(Fraction(v) for v in u),
            omega_seed=omega[:k],
            ubar_given=None if ubar is None else tuple(Fraction(v) for v in ubar),
            omega_given=omega,
        )

    @classmethod
    def from_config(cls, cfg: ParamsConfig) -> Parameters:
        if len(cfg.u) != cfg.k:
            raise ParameterError(f"config: k={cfg.k} but {len(cfg.u)} roots u given")
        return cls.create(cfg.u, cfg.omega, cfg.ubar)

    @classmethod
    def schur_weyl(cls, m: int, n: int, p: Fraction | int, q: Fraction | int) -> Parameters:
        """Level two: u = (−p, m−q), ū = (q, p−n), ω₀ = m−n, ω₁ = nq−mp."""
        p, q = Fraction(p), Fraction(q)
        return cls.create(u=(-p, m - q), omega=(Fraction(m - n), n * q - m * p), ubar=(q, p - n))

    # --- 𝐟 and ω ---------------------------------------------------------------------------

    @cached_property
    def f_coeffs(self) -> list[Fraction]:
        """Ascending coefficients of 𝐟; f_coeffs[k] == 1."""
        return poly_from_roots(self.u)

    @property
    def a(self) -> list[Fraction]:
        """a₁..a_k with 𝐟 = x^k + Σ a_i x^{k−i} (index 0 unused)."""
        return [Fraction(1)] + [self.f_coeffs[self.k - i] for i in range(1, self.k + 1)]

    def omega(self, ell: int) -> Fraction:
        return self.omega_sequence(ell)[ell]

    def omega_sequence(self, ell_max: int) -> list[Fraction]:
        """ω₀..ω_{ℓmax}: the seeds, then the admissibility recursion."""
        seq = list(self.omega_seed[: ell_max + 1])
        a = self.a
        for ell in range(self.k, ell_max + 1):
            seq.append(-sum((a[i] * seq[ell - i] for i in range(1, self.k + 1)), Fraction(0)))
        return seq

    # --- ω̄ and 𝐠 ---------------------------------------------------------------------------

    def bar_expansion(self, a_max: int) -> list[list[Fraction]]:
        """Rows d_a with x̄₁^a e₁ = Σ_i d_a[i] x₁^i e₁, for a = 0..a_max.

        x̄₁ x₁^i e₁ = −x₁^{i+1}e₁ + Σ_{l<i} (ω_{i−1−l} x₁^{l+1} − ω_{i−l} x₁^l) e₁, from
        (x₁ + x̄₁)e₁ = 0 and x̄₁x₁ − x₁x̄₁ = x₁e₁ − e₁x₁.
        """
        omega = self.omega_sequence(a_max + 1)
        rows = [[Fraction(1)]]
        for _ in range(a_max):
            prev = rows[-1]
            nxt = [Fraction(0)] * (len(prev) + 1)
            for i, c in enumerate(prev):
                if not c:
                    continue
                nxt[i + 1] -= c
                for ell in range(i):
                    nxt[ell + 1] += c * omega[i - 1 - ell]
                    nxt[ell] -= c * omega[i - ell]
            rows.append(nxt)
        return rows

    def bar_omega_sequence(self, ell_max: int) -> list[Fraction]:
        """ω̄₀..ω̄_{ℓmax} via e₁x̄₁^a e₁ = Σ_i d_a[i] e₁x₁^i e₁ = Σ_i d_a[i] ω_i e₁."""
        omega = self.omega_sequence(ell_max + 1)
        return [sum((c * omega[i] for i, c in enumerate(row)), Fraction(0)) for row in self.bar_expansion(ell_max)]

    @cached_property
    def g_coeffs(self) -> list[Fraction]:
        """Ascending coefficients of the monic 𝐠 with e₁𝐟(x₁) = (−1)^k e₁𝐠(x̄₁)."""
        k = self.k
        rows = self.bar_expansion(k)
        square = [[row[i] if i < len(row) else Fraction(0) for i in range(k + 1)] for row in rows]
        # σ turns x̄₁^a e₁ = Σ d x₁^i e₁ into e₁x̄₁^a = Σ d e₁x₁^i; invert to write e₁x₁^a in x̄ powers.
        inv = linalg.inverse(square)
        sign = -1 if k % 2 else 1
        return [sign * sum((self.f_coeffs[a] * inv[a][b] for a in range(k + 1)), Fraction(0)) for b in range(k + 1)]

    @property
    def b(self) -> list[Fraction]:
        """b₁..b_k with 𝐠 = x̄^k + Σ b_i x̄^{k−i} (index 0 unused)."""
        return [Fraction(1)] + [self.g_coeffs[self.k - i] for i in range(1, self.k + 1)]

    @cached_property
    def ubar(self) -> tuple[Fraction, ...] | None:
        """Roots of 𝐠 when they are all rational."""
        if self.ubar_given is not None:
            return tuple(self.ubar_given)
        found = rational_roots(self.g_coeffs)
        return None if found is None else tuple(found)

    # --- identity --------------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "u": _canon(self.u),
            "ubar": None if self.ubar is None else _canon(self.ubar),
            "omega": _canon(self.omega_seed),
            "g": _canon(self.g_coeffs),
        }

    @cached_property
    def digest(self) -> str:
        canon = json.dumps({"k": self.k, "u": _canon(self.u), "omega": _canon(self.omega_seed)}, sort_keys=True)
        return hashlib.sha256(canon.encode()).hexdigest()[:16]

    def with_omega(self, ell: int, value: Fraction) -> Parameters:
        """A copy with one seed replaced (negative controls)."""
        seeds = list(self.omega_seed)
        seeds[ell] = Fraction(value)
        return Parameters(k=self.k, u=self.u, omega_seed=tuple(seeds))


def typical(m: int, n: int, p: Fraction, q: Fraction) -> bool:
    """λ_pq is typical iff p−q ∉ ℤ, or p−q ≤ −m, or p−q ≥ n."""
    diff = Fraction(p) - Fraction(q)
    return diff.denominator != 1 or diff <= -m or diff >= n
