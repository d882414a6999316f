"""Integer row-elimination kernel (pure-Python reference implementation).

All exact linear algebra in the package funnels through rref_scaled: a
Gauss-Jordan elimination on integer rows using cross-multiplication, so no
rationals appear until the very end.  Each pivot row of the result equals the
corresponding row of the rational reduced row echelon form *scaled by its
pivot entry*; dividing row i by row[i][pivots[i]] recovers the exact RREF.

Rows are GCD-reduced after every combination to keep entries small.  The
compiled twin (isostrat._elim_c) implements the identical algorithm; both
must produce bit-identical output.
"""

from __future__ import annotations

from math import gcd

__all__ = ["rref_scaled"]


def _strip(row: list[int]) -> None:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for j, v in enumerate(row):
            if v:
                row[j] = v // g


def rref_scaled(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduce integer rows in place; return (rows, pivot columns).

    On return, rows[i] for i < len(pivots) is the i-th RREF row scaled by the
    (positive or negative) integer rows[i][pivots[i]]; remaining rows are zero.
    """
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        # pick the smallest-magnitude pivot to limit coefficient growth
        best = -1
        for i in range(r, m):
            v = rows[i][c]
            if v and (best < 0 or abs(v) < abs(rows[best][c])):
                best = i
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, m):
            row = rows[i]
            v = row[c]
            if v:
                for j in range(c, ncols):
                    row[j] = row[j] * piv - piv_row[j] * v
                _strip(row)
        pivots.append(c)
        r += 1
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        piv_row = rows[k]
        piv = piv_row[c]
        for i in range(k):
            row = rows[i]
            v = row[c]
            if v:
                for j in range(ncols):
                    row[j] = row[j] * piv - piv_row[j] * v
                _strip(row)
    return rows, pivots
