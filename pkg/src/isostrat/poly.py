"""Multivariate polynomials over the rationals, graded by total degree.

A polynomial is an ordered variable tuple plus a map from exponent vectors to
nonzero Fraction coefficients (the zero polynomial is the empty map).  The
canonical term order is graded lexicographic with earlier variables greater;
monomial_basis and the printer both follow it, so printed forms and
coefficient vectors are reproducible across runs.

The text grammar (used by the CLI and the session files) is a signed sum of
terms; a term is an optional rational coefficient and '*'-separated factors
"name" or "name^k"; whitespace is ignored.  Example: "-1/14*J2 + 4/7*s1^2".
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .exact import ONE, ZERO, ExactMatrix, LinearSubspace, as_scalar

Expo = tuple[int, ...]


def _term_key(expo: Expo) -> tuple[int, Expo]:
    return (sum(expo), expo)


class MultiPoly:
    """Immutable polynomial with Fraction coefficients; no zero terms stored."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Expo, Fraction] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: dict[Expo, Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                if len(expo) != n:
                    raise ValueError(f"exponent vector {expo} has length != {n}")
                c = as_scalar(coeff)
                if c != 0:
                    clean[tuple(expo)] = c
        self.terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> MultiPoly:
        return MultiPoly(variables)

    @staticmethod
    def constant(variables: Sequence[str], value: int | str | Fraction) -> MultiPoly:
        c = as_scalar(value)
        return MultiPoly(variables, {(0,) * len(tuple(variables)): c} if c else {})

    @staticmethod
    def variable(variables: Sequence[str], index: int) -> MultiPoly:
        variables = tuple(variables)
        expo = [0] * len(variables)
        expo[index] = 1
        return MultiPoly(variables, {tuple(expo): ONE})

    @staticmethod
    def monomial(variables: Sequence[str], expo: Expo, coeff: int | str | Fraction = 1) -> MultiPoly:
        return MultiPoly(variables, {tuple(expo): as_scalar(coeff)})

    @staticmethod
    def linear_form(variables: Sequence[str], coeffs: Sequence[Fraction]) -> MultiPoly:
        variables = tuple(variables)
        if len(coeffs) != len(variables):
            raise ValueError("coefficient count does not match variable count")
        terms: dict[Expo, Fraction] = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                expo = [0] * len(variables)
                expo[i] = 1
                terms[tuple(expo)] = as_scalar(c)
        return MultiPoly(variables, terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_part(self, d: int) -> MultiPoly:
        return MultiPoly(self.variables, {e: c for e, c in self.terms.items() if sum(e) == d})

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), ZERO)

    def coefficient(self, expo: Expo) -> Fraction:
        return self.terms.get(tuple(expo), ZERO)

    def _check_same_vars(self, other: MultiPoly) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: MultiPoly) -> MultiPoly:
        self._check_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.variables, out)

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        self._check_same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.variables, out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        self._check_same_vars(other)
        if not self.terms or not other.terms:
            return MultiPoly(self.variables)
        out: dict[Expo, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.variables, out)

    def scale(self, c: int | str | Fraction) -> MultiPoly:
        c = as_scalar(c)
        if c == 0:
            return MultiPoly(self.variables)
        return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # -- calculus ------------------------------------------------------------

    def derivative(self, index: int) -> MultiPoly:
        out: dict[Expo, Fraction] = {}
        for e, c in self.terms.items():
            k = e[index]
            if k:
                e2 = list(e)
                e2[index] = k - 1
                out[tuple(e2)] = c * k
        return MultiPoly(self.variables, out)

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.variables):
            raise ValueError("point has wrong dimension")
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for expo in sorted(self.terms, key=_term_key, reverse=True):
            coeff = self.terms[expo]
            factors = []
            for name, k in zip(self.variables, expo):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(pieces)
        return "-" + text[2:] if text.startswith("- ") else text[2:]

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize polynomial text at offset {pos}: {text[pos:pos + 12]!r}")
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse the polynomial grammar into a MultiPoly over the given variables."""
    variables = tuple(variables)
    index = {name: i for i, name in enumerate(variables)}
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    result = MultiPoly.zero(variables)
    pos = 0

    def parse_term(pos: int, sign: int) -> tuple[MultiPoly, int]:
        coeff = Fraction(sign)
        expo = [0] * len(variables)
        expect_atom = True
        while pos < len(tokens):
            kind, value = tokens[pos]
            if not expect_atom:
                if kind == "op" and value == "*":
                    pos += 1
                    expect_atom = True
                    continue
                break
            if kind == "num":
                if "/" in value:
                    p, q = value.split("/")
                    if int(q) == 0:
                        raise ValueError(f"zero denominator in coefficient {value!r}")
                    coeff *= Fraction(int(p), int(q))
                else:
                    coeff *= int(value)
                pos += 1
                expect_atom = False
            elif kind == "name":
                if value not in index:
                    raise ValueError(f"unknown variable {value!r} (expected one of {list(variables)})")
                power = 1
                pos += 1
                if pos < len(tokens) and tokens[pos] == ("op", "^"):
                    pos += 1
                    if pos >= len(tokens) or tokens[pos][0] != "num" or "/" in tokens[pos][1]:
                        raise ValueError("exponent must be a positive integer")
                    power = int(tokens[pos][1])
                    if power <= 0:
                        raise ValueError("exponent must be a positive integer")
                    pos += 1
                expo[index[value]] += power
                expect_atom = False
            else:
                raise ValueError(f"unexpected token {value!r} in polynomial text")
        if expect_atom:
            raise ValueError("dangling operator in polynomial text")
        return MultiPoly.monomial(variables, tuple(expo), coeff), pos

    sign = 1
    first = True
    while pos < len(tokens):
        kind, value = tokens[pos]
        if kind == "op" and value in "+-":
            if not first and tokens[pos - 1][0] == "op" and tokens[pos - 1][1] in "+-":
                raise ValueError("doubled sign in polynomial text")
            sign = -1 if value == "-" else 1
            pos += 1
            if first:
                first = False
            term, pos = parse_term(pos, sign)
            result = result + term
            continue
        if first:
            term, pos = parse_term(pos, 1)
            result = result + term
            first = False
            continue
        raise ValueError(f"expected '+' or '-' before {value!r}")
    return result


# -- monomial bases ------------------------------------------------------------


def monomial_exponents(n: int, d: int) -> list[Expo]:
    """All exponent vectors of total degree exactly d, graded-lex order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return [()] if d == 0 else []
    out: list[Expo] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + (k,), remaining - k, slots - 1)

    rec((), d, n)
    return out


def monomial_basis(variables: Sequence[str], d: int) -> list[MultiPoly]:
    """All degree-d monomials as polynomials; count is C(n+d-1, d)."""
    variables = tuple(variables)
    monos = [MultiPoly.monomial(variables, e) for e in monomial_exponents(len(variables), d)]
    assert len(monos) == (comb(len(variables) + d - 1, d) if variables else (1 if d == 0 else 0))
    return monos


def coefficient_vector(p: MultiPoly, exponents: Sequence[Expo]) -> list[Fraction]:
    """Coefficients of p on the listed exponents; p must be supported there."""
    listed = set(exponents)
    for e in p.terms:
        if e not in listed:
            raise ValueError(f"polynomial has a term {e} outside the listed exponents")
    return [p.terms.get(e, ZERO) for e in exponents]


# -- substitution and the group action ----------------------------------------


def substitute(p: MultiPoly, images: Sequence[MultiPoly]) -> MultiPoly:
    """Compose p with variable images: the result is p(images[0], ..., images[n-1]).

    All images must share one variable tuple, which becomes the result's.
    """
    if len(images) != len(p.variables):
        raise ValueError("need one image per variable")
    if not images:
        return MultiPoly((), dict(p.terms))
    target = images[0].variables
    for q in images:
        if q.variables != target:
            raise ValueError("images must share one variable tuple")
    powers: list[list[MultiPoly]] = [[MultiPoly.constant(target, 1), img] for img in images]

    def power(i: int, k: int) -> MultiPoly:
        cache = powers[i]
        while len(cache) <= k:
            cache.append(cache[-1] * cache[1])
        return cache[k]

    result = MultiPoly.zero(target)
    for expo, coeff in p.terms.items():
        term = MultiPoly.constant(target, coeff)
        for i, k in enumerate(expo):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def act(matrix: ExactMatrix, p: MultiPoly) -> MultiPoly:
    """Substitute v -> matrix @ v into p (pure substitution; degree preserved).

    For a group action (g.p)(v) = p(g^{-1} v), the caller passes the matrix of
    g^{-1}; acting is then contravariant: act(m1, act(m2, p)) = act(m2 @ m1, p).
    """
    n = len(p.variables)
    if matrix.nrows != n or matrix.ncols != n:
        raise ValueError(f"matrix is {matrix.nrows}x{matrix.ncols}, polynomial has {n} variables")
    images = [MultiPoly.linear_form(p.variables, row) for row in matrix.rows]
    return substitute(p, images)


def substitution_matrix(images: Sequence[MultiPoly], d: int) -> ExactMatrix:
    """Matrix of p -> p(images) on the degree-d slice, in monomial_basis coordinates.

    images[i] is the (homogeneous linear) image of source variable i; column j
    holds the coefficient vector of the image of the j-th source monomial.
    Built degree by degree: the image of m = x_i * m' is image(m') * images[i].
    """
    n_src = len(images)
    if not images:
        raise ValueError("need at least one image")
    target = images[0].variables
    for q in images:
        if q.variables != target:
            raise ValueError("images must share one variable tuple")
        if not q.is_zero() and (not q.is_homogeneous() or q.total_degree() != 1):
            raise ValueError("images must be homogeneous linear forms")
    prev: dict[Expo, MultiPoly] = {(0,) * n_src: MultiPoly.constant(target, 1)}
    for deg in range(1, d + 1):
        cur: dict[Expo, MultiPoly] = {}
        for mono in monomial_exponents(n_src, deg):
            i = next(k for k, e in enumerate(mono) if e)
            parent = list(mono)
            parent[i] -= 1
            cur[mono] = prev[tuple(parent)] * images[i]
        prev = cur
    src_monos = monomial_exponents(n_src, d)
    dst_monos = monomial_exponents(len(target), d)
    columns = [coefficient_vector(prev[mono], dst_monos) for mono in src_monos]
    return ExactMatrix(list(zip(*columns)) if columns else [])


def derivation_action(matrix: ExactMatrix, p: MultiPoly) -> MultiPoly:
    """Directional derivative sum_i (matrix @ v)_i * dp/dx_i.

    This is the infinitesimal version of act: p is invariant under the one
    parameter group of matrix iff the result is zero.
    """
    n = len(p.variables)
    if matrix.nrows != n or matrix.ncols != n:
        raise ValueError("matrix size does not match variable count")
    result = MultiPoly.zero(p.variables)
    for i in range(n):
        dp = p.derivative(i)
        if dp.is_zero():
            continue
        form = MultiPoly.linear_form(p.variables, matrix.rows[i])
        result = result + form * dp
    return result


def laplacian(p: MultiPoly) -> MultiPoly:
    """Sum of second partial derivatives, exact."""
    result = MultiPoly.zero(p.variables)
    for i in range(len(p.variables)):
        result = result + p.derivative(i).derivative(i)
    return result


def restriction_variables(m: int, prefix: str = "s") -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(m))


def restrict_to_subspace(p: MultiPoly, subspace: LinearSubspace, prefix: str = "s") -> MultiPoly:
    """Restrict p to a subspace: substitute x = s1*b1 + ... + sm*bm.

    The fresh coordinates s1..sm bind to the subspace basis order; the result
    lives in those coordinates.
    """
    if subspace.ambient != len(p.variables):
        raise ValueError("subspace ambient dimension does not match polynomial variables")
    svars = restriction_variables(subspace.dim, prefix)
    images = [
        MultiPoly.linear_form(svars, [b[k] for b in subspace.basis])
        for k in range(subspace.ambient)
    ]
    if not images:
        return MultiPoly.constant(svars, p.constant_term())
    return substitute(p, images)


# -- truncated power series -----------------------------------------------------


class TruncatedSeries:
    """Power series in one formal variable, exact modulo degree > cutoff."""

    __slots__ = ("cutoff", "coeffs")

    def __init__(self, cutoff: int, coeffs: Iterable[int | str | Fraction]):
        vals = [as_scalar(c) for c in coeffs]
        if len(vals) > cutoff + 1:
            vals = vals[: cutoff + 1]
        vals.extend([ZERO] * (cutoff + 1 - len(vals)))
        self.cutoff = cutoff
        self.coeffs = tuple(vals)

    @staticmethod
    def zero(cutoff: int) -> TruncatedSeries:
        return TruncatedSeries(cutoff, [])

    @staticmethod
    def one(cutoff: int) -> TruncatedSeries:
        return TruncatedSeries(cutoff, [ONE])

    def _check(self, other: TruncatedSeries) -> None:
        if self.cutoff != other.cutoff:
            raise ValueError("cutoff mismatch")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self.cutoff, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self.cutoff, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        out = [ZERO] * (self.cutoff + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.cutoff + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(self.cutoff, out)

    def scale(self, c: int | str | Fraction) -> TruncatedSeries:
        c = as_scalar(c)
        return TruncatedSeries(self.cutoff, [c * a for a in self.coeffs])

    def reciprocal(self) -> TruncatedSeries:
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = 1 / a0
        out = [inv0] + [ZERO] * self.cutoff
        for k in range(1, self.cutoff + 1):
            acc = ZERO
            for i in range(1, k + 1):
                ai = self.coeffs[i]
                if ai:
                    acc += ai * out[k - i]
            out[k] = -acc * inv0
        return TruncatedSeries(self.cutoff, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.cutoff == other.cutoff
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r} + O(t^{self.cutoff + 1}))"
