"""Finite matrix groups as fully enumerated element lists.

A group is closed from its generator matrices by breadth-first products
(identity first, generator order as given), which fixes the element order and
hence every index that downstream code stores.  Subgroups are index sets into
that enumeration; all subgroup arithmetic (closure, conjugation, normalizers,
quotients) runs on the multiplication table, never on matrices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact import ExactMatrix, rank


class GroupNotFiniteWithinCap(Exception):
    """Closure exceeded the element cap; the generated group may be infinite."""


class NonInvertibleGenerator(Exception):
    pass


class FiniteMatrixGroup:
    """Enumerated group of exact matrices with multiplication and inverse tables."""

    __slots__ = (
        "elements",
        "table",
        "inverse",
        "generator_indices",
        "dim",
        "_index",
        "_subgroup_classes",
    )

    def __init__(
        self,
        elements: Sequence[ExactMatrix],
        table: Sequence[Sequence[int]],
        generator_indices: Sequence[int],
    ):
        self.elements = tuple(elements)
        self.table = tuple(tuple(row) for row in table)
        self.generator_indices = tuple(generator_indices)
        self.dim = self.elements[0].nrows if self.elements else 0
        self._index = {m: i for i, m in enumerate(self.elements)}
        self._subgroup_classes: list[SubgroupClass] | None = None
        inv = [-1] * len(self.elements)
        for i, row in enumerate(self.table):
            for j, prod in enumerate(row):
                if prod == 0:
                    inv[i] = j
                    break
        self.inverse = tuple(inv)

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_index(self, m: ExactMatrix) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise ValueError("matrix is not an element of this group") from None

    def contains_matrix(self, m: ExactMatrix) -> bool:
        return m in self._index

    def element_order(self, i: int) -> int:
        n = 1
        x = i
        while x != 0:
            x = self.table[x][i]
            n += 1
        return n

    def conjugate_index(self, x: int, i: int) -> int:
        """Index of x * m_i * x^-1."""
        return self.table[self.table[x][i]][self.inverse[x]]

    def conjugate_set(self, x: int, indices: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.conjugate_index(x, i) for i in indices))

    def generated_subgroup(self, gens: Iterable[int]) -> tuple[int, ...]:
        known = {0}
        frontier = [0]
        gen_list = sorted(set(gens))
        while frontier:
            x = frontier.pop()
            for g in gen_list:
                y = self.table[x][g]
                if y not in known:
                    known.add(y)
                    frontier.append(y)
        return tuple(sorted(known))

    def is_subgroup_set(self, indices: Sequence[int]) -> bool:
        s = set(indices)
        if 0 not in s:
            return False
        return all(self.table[i][j] in s for i in s for j in s)


def close_group(generators: Sequence[ExactMatrix], cap: int = 10000) -> FiniteMatrixGroup:
    """Enumerate the group generated by the matrices, breadth-first from the identity.

    Raises GroupNotFiniteWithinCap when more than cap elements appear, and
    NonInvertibleGenerator for singular input.
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].nrows
    for g in generators:
        if g.nrows != g.ncols or g.nrows != n:
            raise ValueError("generators must be square matrices of equal size")
        if rank(g) != n:
            raise NonInvertibleGenerator(f"generator {g!r} is singular")
    identity = ExactMatrix.identity(n)
    elements: list[ExactMatrix] = [identity]
    index: dict[ExactMatrix, int] = {identity: 0}
    # right-multiplication products discovered during BFS; reused for the table
    step: list[list[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for g in generators:
            prod = elements[i] @ g
            j = index.get(prod)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise GroupNotFiniteWithinCap(
                        f"closure exceeded cap={cap}; set a higher cap if the group is larger"
                    )
                elements.append(prod)
                index[prod] = j
                queue.append(j)
            row.append(j)
        step.append(row)
    order = len(elements)
    # parent decomposition: element j>0 first appears as elements[p] @ generators[k]
    parent = [(-1, -1)] * order
    for i in range(order):
        for k in range(len(generators)):
            j = step[i][k]
            if j > i and parent[j] == (-1, -1):
                parent[j] = (i, k)
    table = [[-1] * order for _ in range(order)]
    for i in range(order):
        table[i][0] = i
    for j in range(1, order):
        p, k = parent[j]
        for i in range(order):
            table[i][j] = step[table[i][p]][k]
    gen_indices = [index[g] for g in generators]
    return FiniteMatrixGroup(elements, table, gen_indices)


class SubgroupHandle:
    """A subgroup of an enumerated group, held as a sorted element-index tuple."""

    __slots__ = ("group", "indices", "_set")

    def __init__(self, group: FiniteMatrixGroup, indices: Iterable[int]):
        self.group = group
        self.indices = tuple(sorted(set(indices)))
        self._set = frozenset(self.indices)
        if not group.is_subgroup_set(self.indices):
            raise ValueError("index set is not closed under multiplication")

    @property
    def order(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self._set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubgroupHandle)
            and self.group is other.group
            and self.indices == other.indices
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.indices))

    def __repr__(self) -> str:
        return f"SubgroupHandle(order {self.order} of group order {self.group.order})"

    def conjugate_by(self, x: int) -> SubgroupHandle:
        return SubgroupHandle(self.group, self.group.conjugate_set(x, self.indices))

    def is_subset_of(self, other: SubgroupHandle) -> bool:
        return self._set <= other._set

    def matrices(self) -> list[ExactMatrix]:
        return [self.group.elements[i] for i in self.indices]


def subgroup_from_matrices(group: FiniteMatrixGroup, matrices: Sequence[ExactMatrix]) -> SubgroupHandle:
    gens = [group.element_index(m) for m in matrices]
    return SubgroupHandle(group, group.generated_subgroup(gens))


def trivial_subgroup(group: FiniteMatrixGroup) -> SubgroupHandle:
    return SubgroupHandle(group, (0,))


def full_subgroup(group: FiniteMatrixGroup) -> SubgroupHandle:
    return SubgroupHandle(group, range(group.order))


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups: canonical representative plus all members."""

    representative: SubgroupHandle
    members: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return self.representative.order


def _all_subgroup_sets(g: FiniteMatrixGroup) -> set[tuple[int, ...]]:
    cyclics = {g.generated_subgroup([i]) for i in range(g.order)}
    subs: set[tuple[int, ...]] = set(cyclics)
    pending = list(sorted(subs))
    while pending:
        current = pending.pop()
        cur_set = set(current)
        for cyc in cyclics:
            if set(cyc) <= cur_set:
                continue
            joined = g.generated_subgroup(set(current) | set(cyc))
            if joined not in subs:
                subs.add(joined)
                pending.append(joined)
    return subs


def enumerate_subgroups(g: FiniteMatrixGroup, cap: int = 10000) -> list[SubgroupClass]:
    """All subgroups of g, grouped into conjugacy classes.

    Built by closing the cyclic subgroups under pairwise joins; every subgroup
    is reached because each is generated by its own cyclic subgroups one at a
    time.  Class representatives are the lexicographically minimal index sets,
    and classes are ordered by (order descending, representative).
    """
    if g.order > cap:
        raise GroupNotFiniteWithinCap(f"group order {g.order} exceeds cap={cap}")
    if g._subgroup_classes is not None:
        return g._subgroup_classes
    subs = _all_subgroup_sets(g)
    seen: set[tuple[int, ...]] = set()
    classes: list[SubgroupClass] = []
    for sub in sorted(subs):
        if sub in seen:
            continue
        members = {g.conjugate_set(x, sub) for x in range(g.order)}
        seen |= members
        ordered = tuple(sorted(members))
        rep = min(ordered)
        classes.append(SubgroupClass(SubgroupHandle(g, rep), ordered))
    classes.sort(key=lambda c: (-c.order, c.representative.indices))
    g._subgroup_classes = classes
    return classes


def normalizer(g: FiniteMatrixGroup, h: SubgroupHandle) -> SubgroupHandle:
    """N(H) = {g : g H g^-1 = H}; always contains H."""
    if h.group is not g:
        raise ValueError("subgroup does not belong to this group")
    target = h.indices
    members = [x for x in range(g.order) if g.conjugate_set(x, target) == target]
    return SubgroupHandle(g, members)


def are_conjugate(
    g: FiniteMatrixGroup, h1: SubgroupHandle, h2: SubgroupHandle
) -> tuple[bool, int | None]:
    """Whether x h1 x^-1 = h2 for some x, with the first such witness index."""
    if h1.group is not g or h2.group is not g:
        raise ValueError("subgroups do not belong to this group")
    if h1.order != h2.order:
        return False, None
    target = h2.indices
    for x in range(g.order):
        if g.conjugate_set(x, h1.indices) == target:
            return True, x
    return False, None


class QuotientGroup:
    """N/H with coset representatives (minimal index per coset) and a coset table."""

    __slots__ = ("group", "numerator", "denominator", "representatives", "table", "_coset_of")

    def __init__(self, numerator: SubgroupHandle, denominator: SubgroupHandle):
        g = numerator.group
        if denominator.group is not g:
            raise ValueError("subgroups belong to different groups")
        if not denominator.is_subset_of(numerator):
            raise ValueError("denominator is not contained in the numerator")
        for x in numerator.indices:
            if g.conjugate_set(x, denominator.indices) != denominator.indices:
                raise ValueError("denominator subgroup is not normal in the numerator")
        self.group = g
        self.numerator = numerator
        self.denominator = denominator
        coset_of: dict[int, int] = {}
        reps: list[int] = []
        for x in numerator.indices:  # ascending, so each coset keeps its minimal element
            if x in coset_of:
                continue
            rep_id = len(reps)
            reps.append(x)
            for hh in denominator.indices:
                coset_of[g.table[x][hh]] = rep_id
        self.representatives = tuple(reps)
        self._coset_of = coset_of
        self.table = tuple(
            tuple(coset_of[g.table[a][b]] for b in reps) for a in reps
        )

    @property
    def order(self) -> int:
        return len(self.representatives)

    def coset_of(self, element_index: int) -> int:
        return self._coset_of[element_index]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def __repr__(self) -> str:
        return f"QuotientGroup(order {self.order})"


def quotient(n: SubgroupHandle, h: SubgroupHandle) -> QuotientGroup:
    return QuotientGroup(n, h)
