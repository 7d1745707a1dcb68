"""Exact linear algebra over QQ on top of sympy's sparse `DomainMatrix`.

Vectors and matrices cross this boundary as `Fraction` values; everything in between stays
in the `QQ` domain. Sparse inputs are dicts `{(row, col): value}` or lists of row dicts.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseRows = Sequence[Mapping[int, Fraction]]


def qq(x: Fraction | int) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def frac(x: object) -> Fraction:
    r = QQ.to_sympy(x)
    return Fraction(int(r.p), int(r.q))


def from_rows(rows: SparseRows, ncols: int) -> DomainMatrix:
    """A DomainMatrix whose i-th row is the sparse dict rows[i]."""
    data = {i: {j: qq(v) for j, v in row.items() if v} for i, row in enumerate(rows)}
    return DomainMatrix({i: r for i, r in data.items() if r}, (len(rows), ncols), QQ)


def from_dense(rows: Sequence[Sequence[Fraction | int]]) -> DomainMatrix:
    ncols = len(rows[0]) if rows else 0
    return from_rows([{j: Fraction(v) for j, v in enumerate(row) if v} for row in rows], ncols)


def to_dense(m: DomainMatrix) -> list[list[Fraction]]:
    nrows, ncols = m.shape
    out = [[Fraction(0)] * ncols for _ in range(nrows)]
    for i, row in m.to_sdm().items():
        for j, v in row.items():
            out[i][j] = frac(v)
    return out


def rank(rows: SparseRows, ncols: int) -> int:
    if not rows or not ncols:
        return 0
    return from_rows(rows, ncols).rank()


def nullspace(rows: SparseRows, ncols: int) -> list[list[Fraction]]:
    """A basis of {v : A v = 0} for A given by its sparse rows."""
    if not ncols:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = from_rows(rows, ncols).nullspace()
    return to_dense(basis) if basis.shape[0] else []


def left_nullspace(rows: SparseRows, ncols: int) -> list[list[Fraction]]:
    """A basis of {c : Σ c_i rows[i] = 0}."""
    if not rows:
        return []
    return nullspace(transpose_rows(rows, ncols), len(rows))


def transpose_rows(rows: SparseRows, ncols: int) -> list[dict[int, Fraction]]:
    cols: list[dict[int, Fraction]] = [{} for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, v in row.items():
            if v:
                cols[j][i] = Fraction(v)
    return cols


def rref(rows: SparseRows, ncols: int) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    reduced, pivots = from_rows(rows, ncols).rref()
    return to_dense(reduced), tuple(pivots)


def solve(rows: SparseRows, ncols: int, rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One solution of A x = b, or None when the system is inconsistent."""
    augmented = [dict(row) for row in rows]
    for i, b in enumerate(rhs):
        if b:
            augmented[i][ncols] = Fraction(b)
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = reduced[i][ncols]
    return x


def det(rows: Sequence[Sequence[Fraction | int]]) -> Fraction:
    if not rows:
        return Fraction(1)
    return frac(from_dense(rows).det())


def inverse(rows: Sequence[Sequence[Fraction | int]]) -> list[list[Fraction]]:
    return to_dense(from_dense(rows).inv())


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    return to_dense(from_dense(a).matmul(from_dense(b)))


def in_span(basis_rows: SparseRows, vector: Mapping[int, Fraction], ncols: int) -> bool:
    """Whether vector lies in the row span of basis_rows."""
    if not any(vector.values()):
        return True
    base = rank(basis_rows, ncols)
    return rank([*basis_rows, vector], ncols) == base


class RowSpan:
    """Coordinates of vectors in the span of fixed, linearly independent rows.

    One rref of [rows | I] up front; each `coordinates` call is then a pivot read-off and a
    residual check.
    """

    def __init__(self, rows: SparseRows, ncols: int):
        m = len(rows)
        self.ncols = ncols
        augmented = [
            {**{j: Fraction(v) for j, v in row.items() if v}, ncols + i: Fraction(1)} for i, row in enumerate(rows)
        ]
        reduced, pivots = rref(augmented, ncols + m) if m else ([], ())
        if len(pivots) < m or (m and pivots[m - 1] >= ncols):
            raise ValueError("rows are linearly dependent")
        self.pivots = pivots[:m]
        self._reduced = [{j: v for j, v in enumerate(row[:ncols]) if v} for row in reduced[:m]]
        self._transform = [{i: v for i, v in enumerate(row[ncols:]) if v} for row in reduced[:m]]

    def coordinates(self, vector: Mapping[int, Fraction]) -> dict[int, Fraction] | None:
        """c with Σ c_i rows[i] = vector, or None when vector is outside the span."""
        residual = {j: Fraction(v) for j, v in vector.items() if v}
        coeffs: dict[int, Fraction] = {}
        for k, p in enumerate(self.pivots):
            c = residual.get(p)
            if not c:
                continue
            for j, v in self._reduced[k].items():
                nv = residual.get(j, Fraction(0)) - c * v
                if nv:
                    residual[j] = nv
                else:
                    residual.pop(j, None)
            for i, v in self._transform[k].items():
                coeffs[i] = coeffs.get(i, Fraction(0)) + c * v
        if residual:
            return None
        return {i: v for i, v in coeffs.items() if v}
