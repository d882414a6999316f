"""Exact dense linear algebra over the rationals.

Scalars are fractions.Fraction throughout: arbitrary-precision, always in
lowest terms with positive denominator, serialized as "p/q" (or "p" when the
denominator is 1).  There is no floating point anywhere in this package.

Matrices are immutable tuples of tuples of Fractions.  Row reduction goes
through the integer elimination kernel (compiled when available): each row is
scaled to integers first, reduced there, and divided back by its pivot at the
end, so Fraction arithmetic never appears in the elimination loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from ._core import rref_scaled

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational; reject floats and zero denominators."""
    text = text.strip()
    if any(ch in text for ch in ".eE") and not text.lstrip("+-").isdigit():
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
    return value


def format_scalar(value: Fraction) -> str:
    return str(value)


def as_scalar(value: int | str | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


class ExactMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int | str | Fraction]], ncols: int | None = None):
        data = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
        else:
            width = ncols or 0
        self.rows = data
        self.nrows = len(data)
        self.ncols = width

    @staticmethod
    def identity(n: int) -> ExactMatrix:
        return ExactMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> ExactMatrix:
        return ExactMatrix([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Fraction]]) -> ExactMatrix:
        return ExactMatrix(rows)

    @staticmethod
    def diagonal(entries: Sequence[int | str | Fraction]) -> ExactMatrix:
        vals = [as_scalar(v) for v in entries]
        n = len(vals)
        return ExactMatrix([[vals[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"ExactMatrix({self.nrows}x{self.ncols}: {body})"

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} vs {other.nrows}")
        cols = list(zip(*other.rows)) if other.rows else []
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix([[-a for a in row] for row in self.rows])

    def scale(self, c: int | str | Fraction) -> ExactMatrix:
        c = as_scalar(c)
        return ExactMatrix([[c * a for a in row] for row in self.rows])

    def _same_shape(self, other: ExactMatrix) -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(list(zip(*self.rows)) if self.rows else [])

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} does not match {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == (ONE if i == j else ZERO)
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.rows for v in row)

    def inverse(self) -> ExactMatrix:
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        ident = ExactMatrix.identity(n)
        aug = ExactMatrix([list(r) + list(i) for r, i in zip(self.rows, ident.rows)])
        red, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return ExactMatrix([row[n:] for row in red.rows])


def stack(matrices: Sequence[ExactMatrix]) -> ExactMatrix:
    mats = [m for m in matrices if m.nrows]
    if not mats:
        raise ValueError("nothing to stack")
    width = mats[0].ncols
    if any(m.ncols != width for m in mats):
        raise ValueError("column count mismatch")
    rows: list[Sequence[Fraction]] = []
    for m in mats:
        rows.extend(m.rows)
    return ExactMatrix(rows)


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    out = []
    for row in m.rows:
        d = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * d) for v in row])
    return out


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form with its strictly increasing pivot column list.

    The result keeps the input shape; zero rows sit at the bottom.
    """
    scaled, pivots = rref_scaled(_integer_rows(m), m.ncols)
    rank = len(pivots)
    rows: list[list[Fraction]] = []
    for i in range(m.nrows):
        if i < rank:
            piv = scaled[i][pivots[i]]
            rows.append([Fraction(v, piv) for v in scaled[i]])
        else:
            rows.append([ZERO] * m.ncols)
    return ExactMatrix(rows, ncols=m.ncols), pivots


def rank(m: ExactMatrix) -> int:
    _, pivots = rref_scaled(_integer_rows(m), m.ncols)
    return len(pivots)


def determinant(m: ExactMatrix) -> Fraction:
    """Exact determinant by plain fractional elimination (desk-scale sizes)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    rows = [list(r) for r in m.rows]
    det = ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        piv = rows[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                for j in range(c, n):
                    rows[i][j] -= f * rows[c][j]
    return det


def is_positive_definite(m: ExactMatrix) -> bool:
    """Sylvester's criterion on the leading principal minors."""
    if m.nrows != m.ncols:
        return False
    for k in range(1, m.nrows + 1):
        minor = ExactMatrix([row[:k] for row in m.rows[:k]])
        if determinant(minor) <= 0:
            return False
    return True


def kernel_with_free(m: ExactMatrix) -> tuple[list[Vector], list[int]]:
    """Canonical kernel basis (RREF free-variable form) with its free columns.

    Vector i has entry 1 at free column free[i], -R[k][free[i]] at pivot
    column pivots[k], and 0 at every other free column; m @ v = 0 exactly.
    """
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    free = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red.rows[i][f]
        basis.append(tuple(v))
        free.append(f)
    return basis, free


def kernel_basis(m: ExactMatrix) -> list[Vector]:
    """Canonical basis of the right kernel: the RREF free-variable basis."""
    return kernel_with_free(m)[0]


def span_rows(vectors: Sequence[Sequence[Fraction]], ambient: int) -> ExactMatrix:
    """RREF row matrix of the span; rank rows, no zero padding."""
    if not vectors:
        return ExactMatrix.zero(0, ambient)
    red, pivots = rref(ExactMatrix(vectors))
    return ExactMatrix(red.rows[: len(pivots)])


def subspace_equal(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], ambient: int) -> bool:
    """True iff span(a) = span(b), by rank comparisons."""
    for vecs in (a, b):
        for v in vecs:
            if len(v) != ambient:
                raise ValueError("basis vector has wrong ambient dimension")
    if not a and not b:
        return True
    ra = rank(ExactMatrix(a)) if a else 0
    rb = rank(ExactMatrix(b)) if b else 0
    if ra != rb:
        return False
    joint = rank(ExactMatrix(list(a) + list(b)))
    return joint == ra


def in_span(vectors: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    if not vectors:
        return all(x == 0 for x in v)
    base = rank(ExactMatrix(vectors))
    return rank(ExactMatrix(list(vectors) + [list(v)])) == base


class LinearSubspace:
    """A subspace of Q^n given by an ordered basis.

    The basis order matters downstream (restriction coordinates s1..sm bind to
    it), so it is preserved exactly as constructed.  Equality and hashing use
    the canonical RREF row matrix of the span, so equal subspaces compare
    equal regardless of the defining basis.
    """

    __slots__ = ("ambient", "basis", "label", "_canonical")

    def __init__(self, ambient: int, basis: Sequence[Sequence[int | str | Fraction]], label: str = ""):
        vecs = tuple(tuple(as_scalar(x) for x in v) for v in basis)
        for v in vecs:
            if len(v) != ambient:
                raise ValueError("basis vector has wrong ambient dimension")
        if vecs and rank(ExactMatrix(vecs)) != len(vecs):
            raise ValueError("basis vectors are linearly dependent")
        self.ambient = ambient
        self.basis = vecs
        self.label = label
        self._canonical: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def canonical_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._canonical is None:
            self._canonical = span_rows(self.basis, self.ambient).rows
        return self._canonical

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearSubspace)
            and self.ambient == other.ambient
            and self.canonical_rows() == other.canonical_rows()
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.canonical_rows()))

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"LinearSubspace(dim {self.dim} in Q^{self.ambient}{tag})"

    def contains(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient:
            raise ValueError("vector has wrong ambient dimension")
        return in_span(self.basis, v)

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coefficients of v in this basis; raises if v is outside the span."""
        if len(v) != self.ambient:
            raise ValueError("vector has wrong ambient dimension")
        cols = ExactMatrix(self.basis).transpose() if self.basis else ExactMatrix.zero(self.ambient, 0)
        aug = ExactMatrix([list(row) + [val] for row, val in zip(cols.rows, v)])
        red, pivots = rref(aug)
        if self.dim in pivots:
            raise ValueError("vector is not in the subspace")
        coeffs = [ZERO] * self.dim
        for i, p in enumerate(pivots):
            coeffs[p] = red.rows[i][self.dim]
        return tuple(coeffs)

    def point(self, coeffs: Sequence[Fraction]) -> Vector:
        if len(coeffs) != self.dim:
            raise ValueError("coefficient count does not match subspace dimension")
        out = [ZERO] * self.ambient
        for c, b in zip(coeffs, self.basis):
            for k in range(self.ambient):
                out[k] += c * b[k]
        return tuple(out)
