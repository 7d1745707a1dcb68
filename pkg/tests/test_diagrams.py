"""Walled Brauer diagrams: the wall, concatenation with loop removal, factorization."""

from __future__ import annotations

import math

import pytest

from cyclobrauer.combinatorics import Permutation
from cyclobrauer.diagrams import (
    WalledDiagram,
    all_diagrams,
    diagram_concat,
    diagram_from_word,
    diagram_word,
    e_word,
    from_perms,
    generator,
    identity,
    with_caps,
)
from cyclobrauer.errors import ParameterError


@pytest.mark.parametrize(("r", "t"), [(0, 0), (1, 1), (2, 1), (2, 2), (3, 1)])
def test_diagram_count(r: int, t: int):
    assert len(all_diagrams(r, t)) == math.factorial(r + t)


def test_vertical_edges_cannot_cross_the_wall():
    # T1–Bb1 and Tb1–B1 on (1,1)
    with pytest.raises(ParameterError):
        WalledDiagram(1, 1, (3, 2, 1, 0))


def test_e_squared_closes_one_loop():
    e = generator(("e", 1), 1, 1)
    assert e.f == 1
    assert diagram_concat(e, e) == (1, e)


def test_simple_reflection_is_an_involution():
    s = generator(("s", 1), 2, 1)
    assert diagram_concat(s, s) == (0, identity(2, 1))


def test_conjugated_cap():
    assert diagram_from_word(e_word(2, 1), 2, 1) == (0, with_caps(2, 1, [(2, 1)]))


def test_perms_round_trip():
    top = Permutation((2, 3, 1))
    bar = Permutation((2, 1), barred=True)
    assert from_perms(top, bar).to_perms() == (top, bar)


def test_every_diagram_has_a_loop_free_word():
    for d in all_diagrams(2, 2):
        assert diagram_from_word(diagram_word(d), 2, 2) == (0, d)


def test_json_names_vertices():
    e = generator(("e", 1), 2, 1)
    data = e.to_json()
    assert ["T1", "Tb1"] in data["edges"]
    assert WalledDiagram.from_json(data) == e
