"""Rational expression of normal-form invariants in restricted global invariants.

Given global invariant generators restricted to a fixed locus, any
monodromy-invariant target polynomial on that locus is expressed as a ratio
A/B of polynomials in the restricted invariants.  The defining identity

    target * (B o j) = A o j        (exactly, in the locus coordinates)

is linear in the unknown coefficients of A and B jointly, so one exact kernel
computation per weighted-degree block suffices; no Groebner machinery is
involved.  Kernel vectors whose denominator collapses to the zero polynomial
(relations among the restricted invariants) are filtered out by evaluating
B o j at a deterministic escalating sequence of rational witness points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Sequence

from .exact import ExactMatrix, LinearSubspace, kernel_basis
from .poly import (
    MultiPoly,
    act,
    coefficient_vector,
    monomial_exponents,
    restrict_to_subspace,
    substitute,
)


class TargetNotMonodromyInvariant(Exception):
    pass


class NoSolutionWithinBound(Exception):
    def __init__(self, bound: int):
        super().__init__(f"no expression with weighted degree <= {bound}")
        self.bound = bound


@dataclass(frozen=True)
class RestrictedInvariantSet:
    """Named restrictions j_k of global invariants to a subspace.

    degrees[k] is the total degree of the unrestricted invariant and serves
    as the weight of the k-th symbol; zero restrictions are kept (flagged)
    so indices stay aligned with the input.
    """

    names: tuple[str, ...]
    polynomials: tuple[MultiPoly, ...]
    degrees: tuple[int, ...]
    subspace: LinearSubspace

    @property
    def zero_flags(self) -> tuple[bool, ...]:
        return tuple(p.is_zero() for p in self.polynomials)

    @property
    def coordinates(self) -> tuple[str, ...]:
        return self.polynomials[0].variables if self.polynomials else ()


def restrict_invariants(
    named: Sequence[tuple[str, MultiPoly]], subspace: LinearSubspace, prefix: str = "s"
) -> RestrictedInvariantSet:
    """Restrict each named invariant to the subspace (coordinates s1..sm)."""
    names = []
    polys = []
    degrees = []
    for name, p in named:
        if len(p.variables) != subspace.ambient:
            raise ValueError(f"invariant {name!r} does not live on the ambient space")
        names.append(name)
        polys.append(restrict_to_subspace(p, subspace, prefix))
        degrees.append(max(p.total_degree(), 0))
    return RestrictedInvariantSet(tuple(names), tuple(polys), tuple(degrees), subspace)


@dataclass(frozen=True)
class RationalInvariantExpression:
    """A/B in the invariant symbols, with its normalization certificate.

    numerator and denominator are polynomials in the invariant names; the
    witness point is a locus point where B o j is nonzero, and bound_used is
    the weighted-degree bound the solution was found under.  B is monic in
    graded-lex leading coefficient.
    """

    numerator: MultiPoly
    denominator: MultiPoly
    witness_point: tuple[Fraction, ...]
    bound_used: int

    def compose(self, jset: RestrictedInvariantSet) -> tuple[MultiPoly, MultiPoly]:
        images = list(jset.polynomials)
        return substitute(self.numerator, images), substitute(self.denominator, images)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def _weighted_monomials(weights: Sequence[int], usable: Sequence[bool], total: int) -> list[tuple[int, ...]]:
    """Exponent vectors e with sum(e_k * weights_k) == total, zero symbols excluded."""
    n = len(weights)
    out: list[tuple[int, ...]] = []

    def rec(idx: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if idx == n:
            if remaining == 0:
                out.append(prefix)
            return
        w = weights[idx]
        if not usable[idx] or w <= 0:
            rec(idx + 1, remaining, prefix + (0,))
            return
        for e in range(remaining // w, -1, -1):
            rec(idx + 1, remaining - e * w, prefix + (e,))

    rec(0, total, ())
    return sorted(out, reverse=True)


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def _witness_points(m: int):
    """Deterministic escalating-height points of Q^m.

    First the powers (1^t, 2^t, ..., m^t); then prime-base points
    (p_1^t, ..., p_m^t), on which distinct monomials take distinct values by
    unique factorization, so any fixed nonzero polynomial is nonzero at some
    point of the tail.
    """
    for t in range(1, 9):
        yield tuple(Fraction((i + 1) ** t) for i in range(m))
    if m > len(_PRIMES):
        raise AssertionError("witness generator supports up to 20 coordinates")
    for t in count(1):
        yield tuple(Fraction(_PRIMES[i] ** t) for i in range(m))


def _nonzero_witness(p: MultiPoly) -> tuple[Fraction, ...] | None:
    if p.is_zero():
        return None
    limit = 8 + len(p.terms) + 2
    for point, _ in zip(_witness_points(len(p.variables)), range(limit)):
        if p.evaluate(point) != 0:
            return point
    raise AssertionError("no witness found for a symbolically nonzero polynomial")


def _check_monodromy(target: MultiPoly, monodromy: Sequence[ExactMatrix]) -> None:
    for m in monodromy:
        if act(m, target) != target:
            raise TargetNotMonodromyInvariant(
                "target is not invariant under the monodromy action"
            )


def _solve_block(
    target: MultiPoly,
    jset: RestrictedInvariantSet,
    b_monos: list[tuple[int, ...]],
    a_monos: list[tuple[int, ...]],
    expansion_cache: dict[tuple[int, ...], MultiPoly],
    svars: tuple[str, ...],
) -> tuple[MultiPoly, MultiPoly] | None:
    """Kernel of the joint coefficient system; first surviving vector or None."""

    def expansion(e: tuple[int, ...]) -> MultiPoly:
        cached = expansion_cache.get(e)
        if cached is None:
            cached = MultiPoly.constant(svars, 1)
            for k, ek in enumerate(e):
                for _ in range(ek):
                    cached = cached * jset.polynomials[k]
            expansion_cache[e] = cached
        return cached

    b_cols = [target * expansion(e) for e in b_monos]
    a_cols = [expansion(e) for e in a_monos]
    support: set[tuple[int, ...]] = set()
    for p in b_cols + a_cols:
        support |= set(p.terms)
    if not support:
        return None
    index = sorted(support, reverse=True)
    columns = [coefficient_vector(p, index) for p in b_cols]
    columns += [[-c for c in coefficient_vector(p, index)] for p in a_cols]
    matrix = ExactMatrix(list(zip(*columns)), ncols=len(columns))
    names = jset.names
    for vec in kernel_basis(matrix):
        b_coeffs = vec[: len(b_monos)]
        denominator = MultiPoly(names, dict(zip(b_monos, b_coeffs)))
        if denominator.is_zero():
            continue
        b_of_j = substitute(denominator, list(jset.polynomials))
        witness = _nonzero_witness(b_of_j)
        if witness is None:
            continue
        numerator = MultiPoly(names, dict(zip(a_monos, vec[len(b_monos) :])))
        return _normalize(numerator, denominator), witness
    return None


def _normalize(numerator: MultiPoly, denominator: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    lead = max(denominator.terms, key=lambda e: (sum(e), e))
    c = denominator.terms[lead]
    return numerator.scale(1 / c), denominator.scale(1 / c)


DEFAULT_BOUND_CAP = 16


def rationalize(
    target: MultiPoly,
    jset: RestrictedInvariantSet,
    monodromy: Sequence[ExactMatrix] = (),
    max_weighted_degree: int | None = None,
    bound_cap: int = DEFAULT_BOUND_CAP,
) -> RationalInvariantExpression:
    """Express a monodromy-invariant target as A/B in the restricted invariants.

    target lives in the locus coordinates s1..sm; monodromy matrices (the
    coset representatives acting on the locus in the same basis) are checked
    first.  Solving walks denominator weighted degrees upward, so the result
    is the minimal representative and is stable under raising the bound.  With
    no explicit bound, the starting bound max(deg target, max weight) doubles
    until bound_cap.
    """
    svars = jset.coordinates
    if jset.polynomials and target.variables != svars:
        raise ValueError("target variables do not match the restricted invariants")
    _check_monodromy(target, monodromy)
    if target.is_zero():
        one = MultiPoly.constant(jset.names, 1)
        point = next(_witness_points(len(svars)))
        return RationalInvariantExpression(MultiPoly.zero(jset.names), one, point, 0)
    weights = jset.degrees
    usable = [not z for z in jset.zero_flags]
    homogeneous = target.is_homogeneous() and all(
        p.is_zero() or p.is_homogeneous() for p in jset.polynomials
    )
    t_deg = target.total_degree()
    if max_weighted_degree is not None:
        schedule = [max_weighted_degree]
    else:
        start = max(t_deg, max(weights, default=1), 1)
        schedule = [min(start, bound_cap)]
        while schedule[-1] < bound_cap:
            schedule.append(min(2 * schedule[-1], bound_cap))
    expansion_cache: dict[tuple[int, ...], MultiPoly] = {}
    tried_b: set[int] = set()
    for bound in schedule:
        for b in range(0, bound + 1):
            if homogeneous:
                # a block depends only on b, so blocks already tried under a
                # smaller bound never need re-solving
                if b in tried_b:
                    continue
                a_deg = t_deg + b
                if a_deg > bound:
                    break
                tried_b.add(b)
                b_monos = _weighted_monomials(weights, usable, b)
                a_monos = _weighted_monomials(weights, usable, a_deg)
            else:
                b_monos = [
                    e for total in range(b + 1) for e in _weighted_monomials(weights, usable, total)
                ]
                a_monos = [
                    e
                    for total in range(min(bound, b + t_deg) + 1)
                    for e in _weighted_monomials(weights, usable, total)
                ]
            if not b_monos or not a_monos:
                continue
            found = _solve_block(target, jset, b_monos, a_monos, expansion_cache, svars)
            if found is not None:
                (numerator, denominator), witness = found
                expr = RationalInvariantExpression(numerator, denominator, witness, bound)
                _verify_identity(target, jset, expr)
                return expr
    raise NoSolutionWithinBound(schedule[-1])


def _verify_identity(
    target: MultiPoly, jset: RestrictedInvariantSet, expr: RationalInvariantExpression
) -> None:
    a_of_j, b_of_j = expr.compose(jset)
    if target * b_of_j != a_of_j:
        raise AssertionError("defining identity target * (B o j) = A o j failed")


def expressions_equivalent(
    e1: RationalInvariantExpression,
    e2: RationalInvariantExpression,
    jset: RestrictedInvariantSet,
) -> bool:
    """Cross-multiplication identity (A1 o j)(B2 o j) = (A2 o j)(B1 o j)."""
    a1, b1 = e1.compose(jset)
    a2, b2 = e2.compose(jset)
    return a1 * b2 == a2 * b1


def expression_from_strings(
    numerator: str, denominator: str, names: Sequence[str]
) -> RationalInvariantExpression:
    """Build an expression from polynomial text in the invariant names (for comparisons)."""
    from .poly import parse_polynomial

    num = parse_polynomial(numerator, names)
    den = parse_polynomial(denominator, names)
    return RationalInvariantExpression(num, den, (), -1)
