"""Partitions, bipartitions, tableaux, permutations and the Kleshchev test."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from cyclobrauer.combinatorics import (
    Bipartition,
    Partition,
    Permutation,
    dominance_leq,
    enumerate_bipartitions,
    final_tableau,
    initial_tableau,
    kleshchev,
    partitions,
    standard_tableaux,
    tableau_perm,
    w_a_perm,
    young_elements,
)
from cyclobrauer.errors import ParameterError


def test_partitions_in_reverse_lex_order():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [Partition()]


def test_partition_rejects_increasing_parts():
    with pytest.raises(ParameterError):
        Partition((1, 2))


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition().conjugate() == Partition()


def test_bipartition_enumeration():
    assert enumerate_bipartitions(2) == [
        Bipartition.of((2,)),
        Bipartition.of((1, 1)),
        Bipartition.of((1,), (1,)),
        Bipartition.of((), (2,)),
        Bipartition.of((), (1, 1)),
    ]
    assert len(enumerate_bipartitions(3)) == 10


def test_dual_swaps_and_conjugates():
    assert Bipartition.of((2,), (1,)).dual() == Bipartition.of((1,), (1, 1))
    assert Bipartition.of((2,), (1,)).dual().dual() == Bipartition.of((2,), (1,))
    assert Bipartition.of((2,), (1,)).conjugate() == Bipartition.of((1, 1), (1,))
    assert Bipartition.of((2,), (1,)).swap().conjugate() == Bipartition.of((2,), (1,)).dual()


def test_dominance_counts_the_first_component_first():
    assert dominance_leq(Bipartition.of((), (1,)), Bipartition.of((1,)))
    assert not dominance_leq(Bipartition.of((1,)), Bipartition.of((), (1,)))
    assert dominance_leq(Bipartition.of((1, 1)), Bipartition.of((2,)))


def test_kleshchev():
    # u1 − u2 = 0: λ¹ ⊆ λ²
    assert kleshchev(Bipartition.of((1,), (1,)), Fraction(0), Fraction(0))
    assert not kleshchev(Bipartition.of((1,)), Fraction(0), Fraction(0))
    # u1 − u2 = 1: λ¹_{1+i} ≤ λ²_i
    assert kleshchev(Bipartition.of((1,)), Fraction(1), Fraction(0))
    assert not kleshchev(Bipartition.of((1, 1)), Fraction(1), Fraction(0))


@pytest.mark.parametrize(("u1", "u2"), [(Fraction(1, 2), Fraction(0)), (Fraction(0), Fraction(3))])
def test_kleshchev_is_vacuous_off_the_natural_numbers(u1: Fraction, u2: Fraction):
    assert all(kleshchev(lam, u1, u2) for lam in enumerate_bipartitions(3))


def test_permutations_act_on_the_right():
    u = Permutation.simple(1, 3)
    v = Permutation.simple(2, 3)
    for a in range(1, 4):
        assert (u * v)(a) == v(u(a))
    assert (u * u).is_identity()


def test_reduced_word_rebuilds_the_permutation():
    w = Permutation((3, 1, 4, 2))
    word = w.reduced_word()
    assert len(word) == w.length() == 3
    assert Permutation.from_word(word, 4) == w
    assert w * w.inverse() == Permutation.identity(4)


def test_w_a_rotation():
    assert w_a_perm(3, 1).images == (3, 1, 2)
    assert w_a_perm(3, 0).is_identity()


def test_standard_tableaux_count():
    lam = Bipartition.of((2, 1), (1,))
    tabs = standard_tableaux(lam)
    assert len(tabs) == math.comb(4, 3) * 2 * 1
    assert tabs[0] == initial_tableau(lam)
    assert all(t.standard for t in tabs)


def test_tableau_perm_moves_the_initial_tableau():
    lam = Bipartition.of((2,), (1, 1))
    for t in standard_tableaux(lam):
        assert initial_tableau(lam).act(tableau_perm(t)) == t


def test_final_tableau_fills_columns_second_component_first():
    lam = Bipartition.of((2,), (1, 1))
    assert final_tableau(lam).to_json() == [[[3, 4]], [[1], [2]]]


def test_young_elements():
    x, y = young_elements((2, 1))
    assert len(x) == len(y) == 2
    assert x * x == x * 2
