"""Exact sparse linear algebra over QQ."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cyclobrauer import linalg


def test_rank_and_nullspace():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}]
    assert linalg.rank(rows, 2) == 1
    (v,) = linalg.nullspace(rows, 2)
    assert v[0] + 2 * v[1] == 0
    (c,) = linalg.left_nullspace(rows, 2)
    assert c[1] and c[0] == -2 * c[1]


def test_solve():
    rows = [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(2)}]
    assert linalg.solve(rows, 2, [Fraction(3), Fraction(4)]) == [1, 2]
    assert linalg.solve([{0: Fraction(1)}, {0: Fraction(2)}], 1, [Fraction(1), Fraction(1)]) is None


def test_det_and_inverse():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert linalg.det(m) == 1
    assert linalg.matmul(m, linalg.inverse(m)) == [[1, 0], [0, 1]]


def test_row_span_coordinates():
    span = linalg.RowSpan([{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1)}], 3)
    assert span.coordinates({0: Fraction(2), 1: Fraction(5)}) == {0: 2, 1: 3}
    assert span.coordinates({2: Fraction(1)}) is None


def test_row_span_rejects_dependent_rows():
    with pytest.raises(ValueError):
        linalg.RowSpan([{0: Fraction(1)}, {0: Fraction(3)}], 2)
