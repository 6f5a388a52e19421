"""Exact linear algebra over the rationals.

Ranks are computed by fraction-free (Bareiss) elimination on integer rows
after clearing denominators, so no floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _clear_row(row: Sequence[Fraction]) -> list[int]:
    denom = 1
    for x in row:
        d = Fraction(x).denominator
        denom = denom * d // gcd(denom, d)
    out = []
    for x in row:
        f = Fraction(x) * denom
        out.append(int(f))
    return out


def rank_int(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, len(work)):
            factor = work[r][col]
            row = work[r]
            top = work[rank]
            # Bareiss updates every lower row so the exact divisions stay exact
            for c in range(col, ncols):
                row[c] = (pivot * row[c] - factor * top[c]) // prev
        prev = pivot
        rank += 1
        if rank == len(work):
            break
    return rank


def determinant_int(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    work = [list(r) for r in matrix]
    if any(len(r) != n for r in work):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            sign = -sign
        pivot = work[col][col]
        for r in range(col + 1, n):
            factor = work[r][col]
            for c in range(col, n):
                work[r][c] = (pivot * work[r][c] - factor * work[col][c]) // prev
        prev = pivot
    return sign * work[n - 1][n - 1]


class RationalMatrix:
    """A dense rational matrix with exact rank."""

    def __init__(self, rows: Iterable[Iterable[Fraction]]):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        self.nrows = len(self.rows)
        self.ncols = widths.pop() if widths else 0

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[Fraction(0)] * ncols for _ in range(nrows)])

    def rank(self) -> int:
        return rank_int(_clear_row(r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.rows]

    def augment(self, extra_cols: Iterable[Sequence[Fraction]]) -> "RationalMatrix":
        """New matrix with extra columns appended on the right."""
        cols = [list(c) for c in extra_cols]
        for c in cols:
            if len(c) != self.nrows:
                raise ValueError("augment column has wrong height")
        return RationalMatrix(
            [row + [c[i] for c in cols] for i, row in enumerate(self.rows)])

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"
