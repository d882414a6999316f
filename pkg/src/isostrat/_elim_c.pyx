# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of isostrat._elim.rref_scaled.

Same algorithm, same output, bit for bit: integer Gauss-Jordan elimination by
cross-multiplication with GCD reduction of every combined row.  Arithmetic
stays on Python ints (entries are arbitrary precision); the win over the pure
version is C-level loop and indexing overhead.
"""

from math import gcd

__all__ = ["rref_scaled"]


cdef void _strip(list row):
    cdef Py_ssize_t j, n = len(row)
    g = 0
    for j in range(n):
        v = row[j]
        if v:
            g = gcd(g, v)
            if g == 1:
                return
    if g > 1:
        for j in range(n):
            v = row[j]
            if v:
                row[j] = v // g


def rref_scaled(list rows, Py_ssize_t ncols):
    """Reduce integer rows in place; return (rows, pivot columns).

    On return, rows[i] for i < len(pivots) is the i-th RREF row scaled by the
    (positive or negative) integer rows[i][pivots[i]]; remaining rows are zero.
    """
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, best, k
    cdef list pivots = []
    cdef list row, piv_row
    for c in range(ncols):
        if r == m:
            break
        best = -1
        for i in range(r, m):
            v = (<list>rows[i])[c]
            if v and (best < 0 or abs(v) < abs((<list>rows[best])[c])):
                best = i
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        piv_row = <list>rows[r]
        piv = piv_row[c]
        for i in range(r + 1, m):
            row = <list>rows[i]
            v = row[c]
            if v:
                for j in range(c, ncols):
                    row[j] = row[j] * piv - piv_row[j] * v
                _strip(row)
        pivots.append(c)
        r += 1
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        piv_row = <list>rows[k]
        piv = piv_row[c]
        for i in range(k):
            row = <list>rows[i]
            v = row[c]
            if v:
                for j in range(ncols):
                    row[j] = row[j] * piv - piv_row[j] * v
                _strip(row)
    return rows, pivots
