"""Isotropy classes, their poset, witnesses, monodromy, and closed-stratum equations.

A subgroup class is an isotropy class iff no strictly larger subgroup has the
same fixed locus (then a generic locus point has exactly that stabilizer; the
rationals are infinite, so a linear space is never a finite union of proper
subspaces).  Witness points are sampled deterministically with escalating
heights: the t-th candidate has basis coefficients (1^t, 2^t, ..., m^t), and
a standard Vandermonde argument bounds how many t any fixed proper subspace
can absorb, so the search provably terminates.

Closed strata of finite groups are exact unions of translated fixed loci;
their equations are the products of translated annihilator forms over all
choice functions, one factor per coset of N(H).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .exact import ExactMatrix, LinearSubspace, kernel_basis
from .groups import (
    QuotientGroup,
    SubgroupClass,
    SubgroupHandle,
    enumerate_subgroups,
    normalizer,
    quotient,
)
from .poly import MultiPoly
from .reps import (
    RepresentationSpec,
    character_fixed_dim,
    fixed_locus,
    restrict_action_matrix,
    stabilizer,
)


class NotAnIsotropyClassError(Exception):
    pass


class EquationCapExceeded(Exception):
    pass


@dataclass(frozen=True)
class StratumRecord:
    """One isotropy class: representative subgroup, fixed locus, witness, poset links."""

    class_id: int
    subgroup: SubgroupHandle
    members: tuple[tuple[int, ...], ...]
    fixed: LinearSubspace
    witness: tuple[Fraction, ...]
    covers: tuple[int, ...]
    """Ids of the classes immediately above this one in the containment order."""

    @property
    def order(self) -> int:
        return self.subgroup.order

    @property
    def fixed_dim(self) -> int:
        return self.fixed.dim


def _coefficient_points(m: int):
    t = 1
    while True:
        yield tuple(Fraction((i + 1) ** t) for i in range(m))
        t += 1


def _witness_in_locus(
    rep: RepresentationSpec, h: SubgroupHandle, locus: LinearSubspace, tries: int
) -> tuple[Fraction, ...] | None:
    if locus.dim == 0:
        v = (Fraction(0),) * rep.dim
        return v if stabilizer(rep, v) == h else None
    for coeffs, _ in zip(_coefficient_points(locus.dim), range(tries)):
        v = locus.point(coeffs)
        if stabilizer(rep, v) == h:
            return v
    return None


def _strictly_larger_subgroups(
    classes: Sequence[SubgroupClass], h: SubgroupHandle
) -> list[tuple[int, ...]]:
    hset = set(h.indices)
    out = []
    for cls in classes:
        for member in cls.members:
            if len(member) > len(hset) and hset < set(member):
                out.append(member)
    return out


def open_fixed_witness(
    rep: RepresentationSpec, h: SubgroupHandle
) -> tuple[Fraction, ...] | None:
    """A rational point of V^H with stabilizer exactly H, or None.

    None means H is not an isotropy class, certified structurally: some
    strictly larger subgroup fixes the whole of V^H (dimension comparison via
    the character formula), so no point of V^H has stabilizer exactly H.
    """
    classes = enumerate_subgroups(rep.group)
    return _open_fixed_witness_cached(rep, h, classes)


def _open_fixed_witness_cached(
    rep: RepresentationSpec, h: SubgroupHandle, classes: Sequence[SubgroupClass]
) -> tuple[Fraction, ...] | None:
    locus = fixed_locus(rep, h)
    larger = _strictly_larger_subgroups(classes, h)
    for member in larger:
        bigger = SubgroupHandle(rep.group, member)
        if character_fixed_dim(rep, bigger) == locus.dim:
            return None
    tries = (len(larger) + 2) * max(locus.dim, 1) + 8
    witness = _witness_in_locus(rep, h, locus, tries)
    if witness is None:
        raise AssertionError("witness sampling failed although H is an isotropy class")
    return witness


def isotropy_classes(rep: RepresentationSpec) -> list[StratumRecord]:
    """The isotropy classes of the finite action, with witnesses and poset covers.

    Ids are assigned by (subgroup order descending, lexicographic
    representative), so reports are reproducible; the class of the stabilizer
    of 0 (the whole group) is always present and maximal.
    """
    cached = getattr(rep, "_isotropy_records", None)
    if cached is not None:
        return cached
    classes = enumerate_subgroups(rep.group)
    records: list[tuple[SubgroupClass, LinearSubspace, tuple[Fraction, ...]]] = []
    for cls in classes:
        witness = _open_fixed_witness_cached(rep, cls.representative, classes)
        if witness is None:
            continue
        records.append((cls, fixed_locus(rep, cls.representative), witness))
    n = len(records)
    below = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                below[i][j] = True
                continue
            hi = records[i][0].representative
            target_members = records[j][0].members
            hi_set = set(hi.indices)
            # [H_i] <= [H_j] iff some conjugate of H_j contains H_i
            below[i][j] = any(hi_set <= set(m) for m in target_members)
    out = []
    for i, (cls, locus, witness) in enumerate(records):
        strict_above = [j for j in range(n) if j != i and below[i][j]]
        covers = tuple(
            j
            for j in strict_above
            if not any(k != j and k != i and below[i][k] and below[k][j] for k in strict_above)
        )
        out.append(StratumRecord(i, cls.representative, cls.members, locus, witness, covers))
    rep._isotropy_records = out  # representations are immutable; memo is idempotent
    return out


def principal_isotropy(rep: RepresentationSpec) -> int:
    """Id of the unique minimal isotropy class, cross-checked on a generic point.

    Both computations run: the poset minimum must be unique, and a
    deterministic escalating sample of V must realize it as a stabilizer class.
    """
    records = isotropy_classes(rep)
    n = len(records)
    reachable = {r.class_id: set(r.covers) for r in records}
    # transitive closure upward
    above: dict[int, set[int]] = {}
    for r in records:
        seen: set[int] = set()
        frontier = list(reachable[r.class_id])
        while frontier:
            j = frontier.pop()
            if j not in seen:
                seen.add(j)
                frontier.extend(reachable[j])
        above[r.class_id] = seen
    minimal = [r for r in records if len(above[r.class_id]) == n - 1]
    if len(minimal) != 1:
        raise AssertionError("isotropy poset does not have a unique minimum")
    bottom = minimal[0]
    member_lookup = {m: r.class_id for r in records for m in r.members}
    for coeffs, _ in zip(_coefficient_points(rep.dim), range(64)):
        sample_class = member_lookup[stabilizer(rep, coeffs).indices]
        if sample_class == bottom.class_id:
            return bottom.class_id
    raise AssertionError("generic sampling never reached the poset minimum")


@dataclass(frozen=True)
class MonodromyRep:
    """N(H)/H acting on V^H in its canonical basis; faithful for isotropy H."""

    gamma: QuotientGroup
    subspace: LinearSubspace
    matrices: tuple[ExactMatrix, ...]

    @property
    def order(self) -> int:
        return self.gamma.order


def monodromy_rep(rep: RepresentationSpec, h: SubgroupHandle) -> MonodromyRep:
    """The induced action of N(H)/H on V^H, verified faithful.

    Raises NotAnIsotropyClassError when H is not an isotropy subgroup (the
    restriction kernel is then larger than H).
    """
    if open_fixed_witness(rep, h) is None:
        raise NotAnIsotropyClassError("subgroup is not an isotropy class")
    locus = fixed_locus(rep, h)
    norm = normalizer(rep.group, h)
    gamma = quotient(norm, h)
    mats = tuple(restrict_action_matrix(rep, r, locus) for r in gamma.representatives)
    ident = ExactMatrix.identity(locus.dim)
    kernel_elements = [
        x for x in norm.indices if restrict_action_matrix(rep, x, locus) == ident
    ]
    if tuple(kernel_elements) != h.indices:
        raise AssertionError("restriction kernel is not exactly H")
    if len(set(mats)) != gamma.order:
        raise AssertionError("monodromy representation is not faithful")
    return MonodromyRep(gamma, locus, mats)


DEFAULT_EQUATION_CAP = 2000


def closed_stratum_equations(
    rep: RepresentationSpec, h: SubgroupHandle, cap: int = DEFAULT_EQUATION_CAP
) -> list[MultiPoly]:
    """Polynomials cutting out exactly the union of the translates g . V^H.

    For coset representatives g_1..g_r of G/N(H) and annihilator forms
    l_1..l_c of V^H, the equations are all products over choice functions
    f: prod_t l_{f(t)}(g_t^{-1} x).  A point satisfies all of them iff some
    translate contains it.  The c^r products are capped.
    """
    if open_fixed_witness(rep, h) is None:
        raise NotAnIsotropyClassError("subgroup is not an isotropy class")
    locus = fixed_locus(rep, h)
    if locus.dim == rep.dim:
        return []
    annihilator = kernel_basis(ExactMatrix(locus.basis, ncols=rep.dim))
    norm = normalizer(rep.group, h)
    norm_set = set(norm.indices)
    coset_reps: list[int] = []
    seen: set[int] = set()
    for x in range(rep.group.order):
        if x in seen:
            continue
        coset_reps.append(x)
        seen |= {rep.group.table[x][nn] for nn in norm_set}
    r = len(coset_reps)
    c = len(annihilator)
    if c**r > cap:
        raise EquationCapExceeded(f"{c}^{r} products exceed the cap {cap}")
    translated_forms: list[list[MultiPoly]] = []
    for g in coset_reps:
        inv = rep.action[rep.group.inverse[g]]
        forms = []
        for ell in annihilator:
            row = ExactMatrix([ell]) @ inv
            forms.append(MultiPoly.linear_form(rep.coordinates, row.rows[0]))
        translated_forms.append(forms)
    equations = []
    for choice in product(range(c), repeat=r):
        poly = MultiPoly.constant(rep.coordinates, 1)
        for t in range(r):
            poly = poly * translated_forms[t][choice[t]]
        equations.append(poly)
    return equations


def stratum_membership(rep: RepresentationSpec, v: Sequence[Fraction]) -> int:
    """Class id of the stabilizer of v (its isotropy class)."""
    records = isotropy_classes(rep)
    member_lookup = {m: r.class_id for r in records for m in r.members}
    return member_lookup[stabilizer(rep, v).indices]
