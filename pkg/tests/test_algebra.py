"""The cyclotomic walled Brauer algebra: rank, relations, products and JSON."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from cyclobrauer.algebra import (
    Monomial,
    WalledBrauerAlgebra,
    basis,
    dimension_report,
    element_from_json,
    element_to_json,
    lemma_zero_checks,
    parse_word,
    rank,
    verify_presentation,
)
from cyclobrauer.diagrams import all_diagrams, diagram_concat
from cyclobrauer.errors import ParameterError
from cyclobrauer.params import Parameters

LEVEL_TWO = Parameters.create([0, 0], [0, 4])


@pytest.mark.parametrize(
    ("k", "r", "t"), [(1, 1, 1), (1, 2, 2), (2, 1, 1), (2, 2, 1), (2, 1, 2), (2, 2, 2), (3, 1, 1)]
)
def test_rank_formula(k: int, r: int, t: int):
    assert len(basis(k, r, t)) == rank(k, r, t) == k ** (r + t) * math.factorial(r + t)


def test_parse_word():
    assert parse_word("2 e1 x1^2 sb1") == (2, [("e", 1), ("x", 1), ("x", 1), ("sbar", 1)])
    with pytest.raises(ParameterError):
        parse_word("q1")


def test_generator_out_of_range():
    with pytest.raises(ParameterError):
        WalledBrauerAlgebra(LEVEL_TWO, 1, 1).word("s1")


@pytest.mark.parametrize("a", range(5))
def test_e_x_power_e_is_omega(a: int):
    alg = WalledBrauerAlgebra(LEVEL_TWO, 1, 1)
    e1 = alg.word("e1")
    assert alg.word(f"e1 x1^{a} e1") == e1 * LEVEL_TWO.omega(a)


def test_cyclotomic_relations_reduce_high_powers():
    alg = WalledBrauerAlgebra(LEVEL_TWO, 1, 1)
    # 𝐟 = x², so x₁² vanishes
    assert alg.word("x1^2").is_zero()
    assert (alg.word("xb1^2") - alg.one() * 4).is_zero()


def test_presentation_holds():
    report = verify_presentation(LEVEL_TWO, 1, 1)
    assert report.healthy, [c.detail for c in report.failures()]


@pytest.mark.slow
@pytest.mark.parametrize(("r", "t"), [(2, 1), (1, 2), (2, 2)])
def test_presentation_holds_on_more_strands(r: int, t: int):
    report = verify_presentation(LEVEL_TWO, r, t)
    assert report.healthy, [c.detail for c in report.failures()]


def test_tampered_omega_is_caught():
    tampered = Parameters.create([0, 0], [0, 5])
    assert not verify_presentation(tampered, 1, 1, reference=LEVEL_TWO).healthy


@pytest.mark.parametrize(
    ("params", "r", "t"),
    [(LEVEL_TWO, 1, 1), (Parameters.create([0], [3]), 2, 2), (Parameters.create([0, 1, 2], [1, 0, 0]), 1, 1)],
)
def test_dimension_report(params: Parameters, r: int, t: int):
    report = dimension_report(params, r, t, samples=5)
    assert report.healthy
    assert report.data["dimension"] == rank(params.k, r, t)
    assert [c.name for c in report.checks] == ["basis", "closure", "associativity"]
    assert len(report.data["omega"]) == 2 * params.k + 1


@pytest.mark.parametrize(("r", "t"), [(1, 1), pytest.param(2, 1, marks=pytest.mark.slow)])
def test_products_stay_in_the_regular_span(r: int, t: int):
    alg = WalledBrauerAlgebra(LEVEL_TWO, r, t)
    monomials = alg.basis()
    regular = set(monomials)
    for a in monomials:
        for b in monomials:
            assert set(alg.product(a, b)) <= regular


@pytest.mark.slow
@pytest.mark.parametrize(
    ("params", "r", "t"),
    [(LEVEL_TWO, 1, 1), (LEVEL_TWO, 2, 1), (LEVEL_TWO, 1, 2), (Parameters.create([0, 1, 2], [1, 0, 0]), 1, 1)],
)
def test_associativity_on_random_triples(params: Parameters, r: int, t: int):
    alg = WalledBrauerAlgebra(params, r, t)
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = (alg.sample(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


@pytest.mark.slow
def test_level_one_products_are_diagram_products():
    omega0 = Fraction(3)
    alg = WalledBrauerAlgebra(Parameters.create([0], [omega0]), 2, 2)
    for d1 in all_diagrams(2, 2):
        for d2 in all_diagrams(2, 2):
            loops, d = diagram_concat(d1, d2)
            a = alg.element({Monomial((0, 0), d1, (0, 0)): 1})
            b = alg.element({Monomial((0, 0), d2, (0, 0)): 1})
            assert a * b == alg.element({Monomial((0, 0), d, (0, 0)): omega0**loops})


def test_sigma_is_an_anti_involution():
    alg = WalledBrauerAlgebra(LEVEL_TWO, 1, 1)
    rng = random.Random(1)
    for _ in range(5):
        a, b = alg.sample(rng), alg.sample(rng)
        assert alg.sigma(alg.sigma(a)) == a
        assert alg.sigma(a * b) == alg.sigma(b) * alg.sigma(a)


def test_element_json():
    alg = WalledBrauerAlgebra(LEVEL_TWO, 1, 1)
    a = alg.word("x1 e1") + alg.word("-3/2 xb1")
    assert element_from_json(element_to_json(a), alg) == a
    assert element_from_json(element_to_json(a)) == a


def test_lemma_residuals_vanish():
    alg = WalledBrauerAlgebra(LEVEL_TWO, 1, 1)
    residuals = lemma_zero_checks(alg, a_max=3)
    assert len(residuals) == 8
    assert all(value.is_zero() for _, value in residuals)
    assert lemma_zero_checks(WalledBrauerAlgebra(LEVEL_TWO, 1, 0)) == []


def test_jucys_murphy_conjugates():
    alg = WalledBrauerAlgebra(LEVEL_TWO, 2, 1)
    assert alg.x_prime(1) == alg.word("x1")
    assert alg.x_prime(2) == alg.word("x2") + alg.word("s1")
