"""The gl(m|n) matrix model M_pq^{rt}: relations, rank of φ, the commutant and highest weight vectors."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cyclobrauer.cellular import CellIndex, delta, lambda_poset
from cyclobrauer.combinatorics import Bipartition
from cyclobrauer.errors import ParameterError, VerificationError
from cyclobrauer import superalgebra
from cyclobrauer.superalgebra import (
    PhiRank,
    SparseOperator,
    SuperModule,
    _lower,
    certify_hwv,
    commutant_dim,
    eigenvalue_report,
    hom_kac_dim,
    phi_rank,
    presentation_report,
    schur_weyl_report,
    seed_vector,
)
from cyclobrauer.weightdiag import SuperWeight, triple_to_weight


@pytest.fixture(scope="module")
def m22() -> SuperModule:
    return SuperModule(2, 2, 0, 2, 1, 1)


def test_dimension_and_parameters(m22: SuperModule):
    assert m22.dimension == 4**2 * 2**4
    assert len(m22.basis) == m22.dimension
    assert m22.params.u == (0, 0)
    assert m22.params.omega_seed == (0, 4)
    assert m22.params.ubar == (2, -2)


def test_atypical_lambda_pq_is_rejected():
    with pytest.raises(ParameterError):
        SuperModule(2, 2, 0, 1, 1, 1)


def test_size_guard():
    with pytest.raises(ParameterError):
        SuperModule(2, 2, 0, 2, 1, 1, max_dim=100)


def test_kac_lowering_sign():
    assert _lower(0, {(1,): Fraction(1)}) == {(0, 1): Fraction(1)}
    assert _lower(1, {(0,): Fraction(1)}) == {(0, 1): Fraction(-1)}
    assert _lower(0, {(0,): Fraction(1)}) == {}


def test_operator_product_applies_left_factor_first():
    a, b, c = ((1,), (), ()), ((2,), (), ()), ((3,), (), ())
    first = SparseOperator({a: {b: Fraction(1)}})
    second = SparseOperator({b: {c: Fraction(2)}})
    assert (first * second).apply({a: Fraction(1)}) == {c: Fraction(2)}
    assert (second * first).is_zero()
    assert (first * 3).ratio(first) == 3


def test_seed_vector_has_the_triple_weight(m22: SuperModule):
    index = CellIndex(0, Bipartition.of((1,)), Bipartition.of((1,)))
    key = seed_vector(m22, index)
    assert key == ((1,), (), (2,))
    assert m22.weight(key) == triple_to_weight(index, 0, 2, 2, 2) == SuperWeight.of([1, -1], [-2, -2])


def test_eigenvalues(m22: SuperModule):
    assert eigenvalue_report(m22).healthy


def test_phi_is_injective_in_the_stable_range(m22: SuperModule):
    rank = phi_rank(m22)
    assert rank.dimension == 8
    assert rank.rank == 8
    assert rank.injective
    assert rank.kernel == []


def test_phi_has_a_kernel_for_gl11():
    module = SuperModule(1, 1, 0, 1, 1, 1)
    rank = phi_rank(module)
    assert rank.rank < 8
    assert rank.kernel
    for a in rank.kernel:
        assert module.element_operator(a).is_zero()


def test_report_expects_a_kernel_past_the_injective_range():
    report = schur_weyl_report(SuperModule(1, 1, 0, 1, 1, 1), commutant=False, highest_weights=False)
    assert report.healthy, [c.detail for c in report.failures()]
    assert report.data["phi"]["rank"] < 8
    assert any(c.name == "kernel" for c in report.checks)


def test_report_flags_a_full_rank_past_the_injective_range(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setattr(superalgebra, "phi_rank", lambda module, seed=0: PhiRank(8, 8, [], True))
    report = schur_weyl_report(SuperModule(1, 1, 0, 1, 1, 1), commutant=False, highest_weights=False)
    assert [c.name for c in report.failures()] == ["rank φ"]


def test_phi_on_the_empty_tensor():
    assert phi_rank(SuperModule(1, 1, 0, 1, 0, 0)).rank == 1


def test_certify_rejects_vanishing_vectors(m22: SuperModule):
    with pytest.raises(VerificationError):
        certify_hwv(m22, CellIndex(1, Bipartition(), Bipartition()), [{}])


@pytest.mark.slow
def test_relations_hold_as_operators(m22: SuperModule):
    report = presentation_report(m22)
    assert report.healthy, [c.detail for c in report.failures()]


@pytest.mark.slow
@pytest.mark.parametrize(("r", "t"), [(1, 1), (2, 0)])
def test_commutant_matches_the_algebra(r: int, t: int):
    assert commutant_dim(SuperModule(2, 2, 0, 2, r, t)) == 8


@pytest.mark.slow
@pytest.mark.parametrize(("r", "t"), [(1, 1), (2, 0)])
def test_highest_weight_vectors_match_cell_modules(r: int, t: int):
    module = SuperModule(2, 2, 0, 2, r, t)
    for index in lambda_poset(r, t):
        hom = hom_kac_dim(module, index)
        assert hom.consistent, hom.to_json()
        dual = CellIndex(index.f, index.mu.dual(), index.nu.swap().dual())
        assert hom.constructed == len(delta(dual, r, t))


@pytest.mark.slow
def test_cap_index_is_the_cell_module(m22: SuperModule):
    hom = hom_kac_dim(m22, CellIndex(1, Bipartition(), Bipartition()))
    assert hom.weight == SuperWeight.of([0, 0], [-2, -2])
    assert hom.action_match


@pytest.mark.slow
def test_schur_weyl_report(m22: SuperModule):
    report = schur_weyl_report(m22)
    assert report.healthy, [c.detail for c in report.failures()]
    assert report.data["phi"]["rank"] == 8
