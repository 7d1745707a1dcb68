"""The weakly cellular basis of 𝓑_{2,r,t}: cell counts, Gram forms, simplicity."""

from __future__ import annotations

import math

import pytest

from cyclobrauer.algebra import WalledBrauerAlgebra
from cyclobrauer.cellular import (
    CellIndex,
    WalledCellularBasis,
    cell_module_C,
    cellular_report,
    delta,
    gram_and_simplicity,
    index_leq,
    lambda_poset,
)
from cyclobrauer.combinatorics import Bipartition
from cyclobrauer.params import Parameters

LEVEL_TWO = Parameters.create([0, 0], [0, 4])
GENERIC = Parameters.create(["1/2", 0], [1, 0])


def test_poset_sizes():
    assert len(lambda_poset(1, 1)) == 5
    assert lambda_poset(0, 0) == [CellIndex(0, Bipartition(), Bipartition())]
    assert lambda_poset(1, 1)[0] == CellIndex(1, Bipartition(), Bipartition())


def test_index_order_puts_larger_f_above():
    low = CellIndex(0, Bipartition.of((1,)), Bipartition.of((1,)))
    high = CellIndex(1, Bipartition(), Bipartition())
    assert index_leq(low, high)
    assert not index_leq(high, low)


@pytest.mark.parametrize(("r", "t"), [(0, 0), (1, 1), (2, 1), (2, 2)])
def test_sum_of_squares_is_the_rank(r: int, t: int):
    total = sum(len(delta(index, r, t)) ** 2 for index in lambda_poset(r, t))
    assert total == 2 ** (r + t) * math.factorial(r + t)


def test_sum_of_squares_by_f():
    by_f = {0: 0, 1: 0, 2: 0}
    for index in lambda_poset(2, 2):
        by_f[index.f] += len(delta(index, 2, 2)) ** 2
    assert by_f == {0: 64, 1: 256, 2: 64}


def test_transition_matrix_is_invertible():
    cellular = WalledCellularBasis(WalledBrauerAlgebra(LEVEL_TWO, 1, 1))
    assert len(cellular.elements) == 8
    assert cellular.transition_rank() == 8


def test_cap_cell_module():
    module = cell_module_C(CellIndex(1, Bipartition(), Bipartition()), LEVEL_TWO, 1, 1)
    assert module.dimension == 2
    assert set(module.action) == {"x1", "xbar1", "e1"}
    assert all(len(m) == 2 for m in module.action.values())


@pytest.mark.parametrize("params", [LEVEL_TWO, GENERIC])
def test_simplicity_matches_the_criterion(params: Parameters):
    for index in lambda_poset(1, 1):
        assert gram_and_simplicity(index, params, 1, 1).consistent, index


def test_generic_parameters_give_nonzero_forms():
    for index in lambda_poset(1, 1):
        assert gram_and_simplicity(index, GENERIC, 1, 1).nonzero, index


def test_cellular_report():
    report = cellular_report(LEVEL_TWO, 1, 1)
    assert report.healthy, [c.detail for c in report.failures()]
    assert len(report.data["cells"]) == 5


@pytest.mark.slow
def test_cellular_report_two_one():
    report = cellular_report(LEVEL_TWO, 2, 1)
    assert report.healthy, [c.detail for c in report.failures()]
