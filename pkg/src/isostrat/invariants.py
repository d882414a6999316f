"""Invariant rings of finite matrix groups, degree by degree.

The degree-d invariant space is computed as the simultaneous kernel of
(substitution-by-generator minus identity) on the degree-d coefficient space;
the Molien series provides an independent dimension count for cross-checks.
Generator extraction is degree-ascending and greedy: at each degree, products
of lower-degree generators are spanned first and the canonical invariant
basis is used to fill the complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import ONE, ZERO, ExactMatrix, rank, stack
from .poly import (
    MultiPoly,
    TruncatedSeries,
    act,
    coefficient_vector,
    derivation_action,
    monomial_exponents,
    substitution_matrix,
)
from .reps import RepresentationSpec


@dataclass(frozen=True)
class InvariantBasisAtDegree:
    degree: int
    basis: tuple[MultiPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class GeneratorSet:
    polynomials: tuple[MultiPoly, ...]
    degrees: tuple[int, ...]
    bound_used: int
    complete: bool
    """complete is False when the degree cap cut the Noether bound short."""


def _generator_action_matrices(rep: RepresentationSpec, d: int) -> list[ExactMatrix]:
    mats = []
    for gi in dict.fromkeys(rep.group.generator_indices):
        a = rep.action[gi]
        images = [MultiPoly.linear_form(rep.coordinates, row) for row in a.rows]
        mats.append(substitution_matrix(images, d))
    return mats


def invariant_basis(rep: RepresentationSpec, d: int) -> InvariantBasisAtDegree:
    """Canonical basis of the degree-d invariants (RREF kernel basis)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    monos = monomial_exponents(rep.dim, d)
    ident = ExactMatrix.identity(len(monos))
    constraints = [m - ident for m in _generator_action_matrices(rep, d)]
    from .exact import kernel_basis

    kern = kernel_basis(stack(constraints)) if constraints else []
    basis = tuple(
        MultiPoly(rep.coordinates, {monos[i]: c for i, c in enumerate(vec) if c}) for vec in kern
    )
    return InvariantBasisAtDegree(d, basis)


def reynolds(rep: RepresentationSpec, p: MultiPoly) -> MultiPoly:
    """Group average (1/|G|) sum_g g.p; projects onto the invariants."""
    if p.variables != rep.coordinates:
        raise ValueError("polynomial variables do not match the representation coordinates")
    total = MultiPoly.zero(rep.coordinates)
    for i in range(rep.group.order):
        total = total + act(rep.inverse_action(i), p)
    return total.scale(Fraction(1, rep.group.order))


def characteristic_polynomial(m: ExactMatrix) -> list[Fraction]:
    """Coefficients [1, c_{n-1}, ..., c_0] of det(tI - M) by Faddeev-LeVerrier."""
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    coeffs = [ONE]
    work = m
    ident = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        ck = -work.trace() / k
        coeffs.append(ck)
        if k < n:
            work = m @ (work + ident.scale(ck))
    return coeffs


def molien_dims(rep: RepresentationSpec, up_to: int) -> list[int]:
    """Coefficients of (1/|G|) sum_g 1/det(1 - t rho(g)) through degree up_to.

    det(1 - tM) has the reversed characteristic coefficients, so each summand
    is one exact series reciprocal; the result is integral by construction.
    """
    if up_to < 0:
        raise ValueError("degree must be nonnegative")
    total = TruncatedSeries.zero(up_to)
    for a in rep.action:
        # det(1 - tM) = t^n char(1/t): the characteristic coefficients read in
        # descending-power order are exactly the ascending-in-t coefficients
        det_series = TruncatedSeries(up_to, characteristic_polynomial(a))
        total = total + det_series.reciprocal()
    total = total.scale(Fraction(1, rep.group.order))
    dims = []
    for c in total.coeffs:
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"Molien coefficient {c} is not a nonnegative integer")
        dims.append(int(c))
    return dims


def _products_of_degree(
    gens: Sequence[MultiPoly], degrees: Sequence[int], d: int
) -> list[MultiPoly]:
    """All products of the generators with total degree exactly d (multisets)."""
    out: list[MultiPoly] = []

    def rec(start: int, remaining: int, current: MultiPoly | None) -> None:
        if remaining == 0:
            if current is not None:
                out.append(current)
            return
        for i in range(start, len(gens)):
            if degrees[i] <= remaining:
                nxt = gens[i] if current is None else current * gens[i]
                rec(i, remaining - degrees[i], nxt)

    rec(0, d, None)
    return out


DEFAULT_GENERATOR_DEGREE_CAP = 12


def minimal_generators(
    rep: RepresentationSpec,
    bound: int | None = None,
    degree_cap: int = DEFAULT_GENERATOR_DEGREE_CAP,
) -> GeneratorSet:
    """Degree-ascending greedy generators of the invariant algebra.

    The default bound is |G| (Noether); a hard cap keeps desk-scale runs
    bounded, and a capped run that could not certify completion is flagged
    rather than silently truncated.  Each returned generator was outside the
    span of products of earlier ones at its own degree, which certifies
    minimality within the bound.
    """
    noether = rep.group.order
    requested = noether if bound is None else bound
    effective = min(requested, degree_cap)
    gens: list[MultiPoly] = []
    degs: list[int] = []
    for d in range(1, effective + 1):
        space = invariant_basis(rep, d)
        if space.dim == 0:
            continue
        monos = monomial_exponents(rep.dim, d)
        rows = [coefficient_vector(p, monos) for p in _products_of_degree(gens, degs, d)]
        current_rank = rank(ExactMatrix(rows, ncols=len(monos))) if rows else 0
        for b in space.basis:
            if current_rank == space.dim:
                break
            candidate = rows + [coefficient_vector(b, monos)]
            r2 = rank(ExactMatrix(candidate, ncols=len(monos)))
            if r2 > current_rank:
                rows = candidate
                current_rank = r2
                gens.append(b)
                degs.append(d)
        if current_rank != space.dim:
            raise AssertionError("generator extension failed to fill the invariant space")
    return GeneratorSet(tuple(gens), tuple(degs), effective, complete=effective >= requested)


@dataclass(frozen=True)
class InvarianceReport:
    invariant: bool
    witness_kind: str | None = None  # "group" or "lie"
    witness_index: int | None = None
    witness_name: str | None = None

    def __bool__(self) -> bool:
        return self.invariant


def verify_invariant(rep: RepresentationSpec, p: MultiPoly) -> InvarianceReport:
    """Check g.p = p on finite generators and X.p = 0 on Lie generators.

    Returns the first failing generator as a witness.
    """
    if p.variables != rep.coordinates:
        raise ValueError("polynomial variables do not match the representation coordinates")
    for gi in dict.fromkeys(rep.group.generator_indices):
        if act(rep.action[gi], p) != p:
            return InvarianceReport(False, "group", gi)
    for name, m in zip(rep.lie_names, rep.lie_matrices):
        if not derivation_action(m, p).is_zero():
            return InvarianceReport(False, "lie", None, name)
    return InvarianceReport(True)
