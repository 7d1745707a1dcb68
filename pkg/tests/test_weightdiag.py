"""Weight diagrams, λ^top, the tilting criterion and the Λ_{2,r,t} ↔ weight bijection."""

from __future__ import annotations

import random

import pytest

from cyclobrauer.cellular import CellIndex, lambda_poset
from cyclobrauer.combinatorics import Bipartition, enumerate_bipartitions, kleshchev
from cyclobrauer.errors import ParameterError
from cyclobrauer.hecke import kleshchev_count
from cyclobrauer.weightdiag import (
    CROSS,
    GREATER,
    LESS,
    SuperWeight,
    WeightDiagram,
    atypicality,
    bipartition_weight,
    diagram_weight,
    lambda_pq,
    lambda_top,
    tilting_criterion,
    tilting_summands,
    tilting_top_form,
    triple_to_weight,
    weight_diagram,
    weight_to_triple,
    window,
)


def test_lambda_top_worked_example():
    diagram = WeightDiagram.of({1: CROSS, 2: CROSS, 4: CROSS, 5: GREATER, 7: CROSS, 8: LESS, 10: LESS})
    top = lambda_top(diagram)
    assert top.vertices(CROSS) == [3, 6, 9, 11]
    assert top.vertices(GREATER) == [5]
    assert top.vertices(LESS) == [8, 10]
    assert top.counts() == diagram.counts()


def test_lambda_top_fixes_typical_diagrams():
    diagram = WeightDiagram.of({-1: GREATER, 0: GREATER, 1: LESS, 2: LESS})
    assert lambda_top(diagram) == diagram


def test_lambda_top_single_cross_moves_one_step():
    diagram = WeightDiagram.of({0: CROSS, 2: LESS})
    assert lambda_top(diagram) == WeightDiagram.of({1: CROSS, 2: LESS})


def test_lambda_top_preserves_counts_on_random_diagrams():
    rng = random.Random(7)
    for _ in range(100):
        marks = {v: rng.choice((CROSS, GREATER, LESS, ".")) for v in range(-6, 7)}
        diagram = WeightDiagram.of(marks)
        top = lambda_top(diagram)
        assert top.counts() == diagram.counts()
        assert top.vertices(GREATER) == diagram.vertices(GREATER)
        assert top.vertices(LESS) == diagram.vertices(LESS)


def test_lambda_pq_diagram_is_two_blocks():
    diagram = weight_diagram(lambda_pq(2, 2, 0, 2))
    assert diagram.vertices(GREATER) == [-1, 0]
    assert diagram.vertices(LESS) == [1, 2]
    assert diagram.typical
    assert atypicality(lambda_pq(2, 2, 0, 2)) == 0


def test_matching_entries_make_a_cross():
    diagram = weight_diagram(SuperWeight.of([0], [0]))
    assert diagram.marks == ((0, CROSS),)
    assert atypicality(SuperWeight.of([0], [0])) == 1


def test_weight_diagram_rejects_non_dominant():
    with pytest.raises(ParameterError):
        weight_diagram(SuperWeight.of([0, 1], [0, 0]))


@pytest.mark.parametrize(
    "weight",
    [SuperWeight.of([1, -1], [-2, -2]), SuperWeight.of([0, 0], [0, 0]), SuperWeight.of([3, 0, -2], [1, 1, -4])],
)
def test_diagram_weight_inverts_weight_diagram(weight: SuperWeight):
    assert diagram_weight(weight_diagram(weight), weight.m, weight.n) == weight


def test_window():
    assert list(window(2, 2, 0, 2)) == [-1, 0, 1, 2]
    assert list(window(3, 3, -3, 0)) == [-5, -4, -3, -2, -1, 0]


def test_render_puts_symbols_over_indices():
    text = weight_diagram(lambda_pq(2, 2, 0, 2)).render()
    top, bottom = text.splitlines()
    assert top.split() == [".", ">", ">", "<", "<", "."]
    assert bottom.split() == ["-2", "-1", "0", "1", "2", "3"]


# --- the bijection ----------------------------------------------------------------------------


def test_empty_index_maps_to_lambda_pq():
    assert triple_to_weight(CellIndex(1, Bipartition(), Bipartition()), 0, 2, 2, 2) == lambda_pq(2, 2, 0, 2)


def test_worked_triple_example():
    mu = Bipartition.of((2, 1), (2, 1))
    nu = Bipartition.of((2, 1), (3, 1))
    weight = lambda_pq(4, 4, 0, 4) + SuperWeight.of([2, 1, -1, -2], [2, 1, -1, -3])
    assert triple_to_weight(CellIndex(0, mu, nu), 0, 4, 4, 4) == weight
    assert weight_to_triple(weight, 0, 4, 6, 7) == CellIndex(0, mu, nu)


@pytest.mark.parametrize(("r", "t", "m"), [(1, 1, 2), (2, 1, 3)])
def test_triple_weight_round_trip(r: int, t: int, m: int):
    seen = set()
    for index in lambda_poset(r, t):
        weight = triple_to_weight(index, 0, m, m, m)
        assert weight.integral_dominant
        assert weight_to_triple(weight, 0, m, r, t) == index
        seen.add(weight)
    assert len(seen) == len(lambda_poset(r, t))


def test_weight_to_triple_rejects_wrong_sizes():
    weight = triple_to_weight(CellIndex(0, Bipartition.of((1,)), Bipartition.of((1,))), 0, 2, 2, 2)
    with pytest.raises(ParameterError):
        weight_to_triple(weight, 0, 2, 2, 1)


def test_weight_to_triple_rejects_non_dominant():
    with pytest.raises(ParameterError):
        weight_to_triple(SuperWeight.of([0, 1], [-2, -2]), 0, 2, 1, 1)


# --- tilting -------------------------------------------------------------------------------------


@pytest.mark.parametrize("k", [0, 1, 2])
def test_kleshchev_gives_the_top_form(k: int):
    m = n = 3
    q = 0
    p = q - m - k
    vertices = list(window(m, n, p, q))
    for size in range(4):
        for mu in enumerate_bipartitions(size):
            if kleshchev(mu.dual(), -p, m - q):
                assert tilting_top_form(weight_diagram(bipartition_weight(mu, p, q, m, n)), vertices), mu


def test_non_kleshchev_fails_the_top_form():
    mu = Bipartition.of((), (1,))
    assert not kleshchev(mu.dual(), 3, 3)
    diagram = weight_diagram(bipartition_weight(mu, -3, 0, 3, 3))
    assert not tilting_top_form(diagram, list(window(3, 3, -3, 0)))


def test_direct_and_top_criteria_agree():
    for size in range(4):
        for lam in enumerate_bipartitions(size):
            assert tilting_criterion(lam, -3, 0, 3, 3).consistent, lam


def test_tilting_criterion_needs_p_minus_q_at_most_minus_m():
    with pytest.raises(ParameterError):
        tilting_criterion(Bipartition.of((1,)), 0, 1, 2, 2)


def test_tilting_summands_small_case():
    assert tilting_summands(1, 0, 2, 2, 2) == [Bipartition.of((), (1,))]


@pytest.mark.parametrize(
    ("r", "expected"),
    [
        (1, [Bipartition.of((), (1,))]),
        (2, [Bipartition.of((1,), (1,)), Bipartition.of((), (2,)), Bipartition.of((), (1, 1))]),
    ],
)
def test_tilting_summands_match_kleshchev_count(r: int, expected: list[Bipartition]):
    found = tilting_summands(r, -3, 0, 3, 3)
    assert found == expected
    assert len(found) == kleshchev_count(r, 3, 3)
