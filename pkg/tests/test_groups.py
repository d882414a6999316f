"""Group closure, subgroup lattices, conjugacy, normalizers, quotients."""

from __future__ import annotations

from itertools import combinations, permutations, product

import pytest

from isostrat.exact import ExactMatrix, determinant
from isostrat.groups import (
    GroupNotFiniteWithinCap,
    NonInvertibleGenerator,
    SubgroupHandle,
    are_conjugate,
    close_group,
    enumerate_subgroups,
    full_subgroup,
    normalizer,
    quotient,
    subgroup_from_matrices,
    trivial_subgroup,
)

from conftest import ROT_X_QUARTER, ROT_Z_QUARTER, SWAP_XY


def octahedral():
    return close_group([ROT_Z_QUARTER, ROT_X_QUARTER])


def test_close_group_sign():
    g = close_group([ExactMatrix([[-1, 0], [0, -1]])])
    assert g.order == 2


def test_close_group_s3(s3_rep):
    assert s3_rep.group.order == 6


def test_close_group_octahedral_against_signed_permutation_oracle():
    octa = octahedral()
    assert octa.order == 24
    oracle = set()
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            rows = [[0] * 3 for _ in range(3)]
            for i in range(3):
                rows[perm[i]][i] = signs[i]
            m = ExactMatrix(rows)
            if determinant(m) == 1:
                oracle.add(m)
    assert len(oracle) == 24
    assert set(octa.elements) == oracle


def test_close_group_caps_infinite_input():
    shear = ExactMatrix([[1, 1], [0, 1]])
    with pytest.raises(GroupNotFiniteWithinCap):
        close_group([shear], cap=100)


def test_close_group_rejects_singular_generator():
    with pytest.raises(NonInvertibleGenerator):
        close_group([ExactMatrix([[1, 1], [1, 1]])])


def test_multiplication_table_consistency():
    octa = octahedral()
    for i in range(octa.order):
        for j in range(octa.order):
            prod = octa.elements[i] @ octa.elements[j]
            assert octa.element_index(prod) == octa.table[i][j]
        assert octa.elements[octa.inverse[i]] @ octa.elements[i] == ExactMatrix.identity(3)


def _brute_force_subgroups_by_subsets(g) -> set[tuple[int, ...]]:
    """All subgroups by testing every subset; only feasible for tiny groups."""
    found = set()
    indices = range(g.order)
    for size in range(1, g.order + 1):
        if g.order % size:
            continue
        for subset in combinations(indices, size):
            if 0 in subset and g.is_subgroup_set(subset):
                found.add(subset)
    return found


def test_enumerate_subgroups_s3_against_subset_oracle(s3_rep):
    g = s3_rep.group
    classes = enumerate_subgroups(g)
    assert [c.order for c in classes] == [6, 3, 2, 1]
    assert len(classes) == 4
    all_members = {m for c in classes for m in c.members}
    assert all_members == _brute_force_subgroups_by_subsets(g)


def test_enumerate_subgroups_c2():
    g = close_group([ExactMatrix([[-1]])])
    assert len(enumerate_subgroups(g)) == 2


def _brute_force_subgroups_by_pairs(g) -> set[tuple[int, ...]]:
    """All subgroups of a group whose subgroups are all 2-generated (true for S4)."""
    found = {g.generated_subgroup([i]) for i in range(g.order)}
    for i in range(g.order):
        for j in range(i + 1, g.order):
            found.add(g.generated_subgroup([i, j]))
    return found


def test_enumerate_subgroups_octahedral_against_pair_oracle():
    octa = octahedral()
    classes = enumerate_subgroups(octa)
    all_members = {m for c in classes for m in c.members}
    oracle = _brute_force_subgroups_by_pairs(octa)
    assert all_members == oracle
    assert len(all_members) == 30
    assert len(classes) == 11
    # the diagonal Klein group appears in one of the classes
    d2 = subgroup_from_matrices(
        octa,
        [ExactMatrix.diagonal([1, -1, -1]), ExactMatrix.diagonal([-1, 1, -1])],
    )
    assert any(d2.indices in c.members for c in classes)


def test_normalizer_s2_is_itself(s3_rep):
    g = s3_rep.group
    s2 = subgroup_from_matrices(g, [SWAP_XY])
    assert normalizer(g, s2) == s2


def test_normalizer_of_klein_group_is_whole_octahedral_group():
    octa = octahedral()
    d2 = subgroup_from_matrices(
        octa,
        [ExactMatrix.diagonal([1, -1, -1]), ExactMatrix.diagonal([-1, 1, -1])],
    )
    assert normalizer(octa, d2).order == 24


def test_normalizer_of_whole_group(s3_rep):
    g = s3_rep.group
    assert normalizer(g, full_subgroup(g)) == full_subgroup(g)


def test_quotient_octahedral_by_klein_is_nonabelian_of_order_six():
    octa = octahedral()
    d2 = subgroup_from_matrices(
        octa,
        [ExactMatrix.diagonal([1, -1, -1]), ExactMatrix.diagonal([-1, 1, -1])],
    )
    q = quotient(normalizer(octa, d2), d2)
    assert q.order == 6
    assert not q.is_abelian()


def test_quotient_by_itself_is_trivial(s3_rep):
    g = s3_rep.group
    q = quotient(full_subgroup(g), full_subgroup(g))
    assert q.order == 1


def test_quotient_c4_by_c2():
    c4 = close_group([ExactMatrix([[0, -1], [1, 0]])])
    minus = ExactMatrix([[-1, 0], [0, -1]])
    c2 = subgroup_from_matrices(c4, [minus])
    q = quotient(full_subgroup(c4), c2)
    assert q.order == 2


def test_quotient_requires_normality():
    octa = octahedral()
    classes = enumerate_subgroups(octa)
    c2_class = next(c for c in classes if c.order == 2 and len(c.members) == 6)
    with pytest.raises(ValueError):
        quotient(full_subgroup(octa), c2_class.representative)


def test_conjugate_transpositions(s3_rep):
    g = s3_rep.group
    classes = enumerate_subgroups(g)
    c2 = next(c for c in classes if c.order == 2)
    members = [SubgroupHandle(g, m) for m in c2.members]
    assert len(members) == 3
    for a in members:
        for b in members:
            ok, witness = are_conjugate(g, a, b)
            assert ok
            assert g.conjugate_set(witness, a.indices) == b.indices


def test_not_conjugate_different_orders(s3_rep):
    g = s3_rep.group
    classes = enumerate_subgroups(g)
    c2 = next(c for c in classes if c.order == 2).representative
    c3 = next(c for c in classes if c.order == 3).representative
    assert are_conjugate(g, c2, c3) == (False, None)


def test_self_conjugate_with_identity_witness(s3_rep):
    g = s3_rep.group
    h = subgroup_from_matrices(g, [SWAP_XY])
    ok, witness = are_conjugate(g, h, h)
    assert ok and witness == 0


def test_conjugation_inside_normalizer_forces_equality():
    # finite shadow of compactness: x H x^-1 subset of H implies equality
    octa = octahedral()
    for cls in enumerate_subgroups(octa):
        h = cls.representative
        hset = set(h.indices)
        for x in range(octa.order):
            conj = set(octa.conjugate_set(x, h.indices))
            assert (conj <= hset) == (conj == hset)


def test_normalizer_contains_subgroup_with_divisible_order():
    octa = octahedral()
    for cls in enumerate_subgroups(octa):
        h = cls.representative
        n = normalizer(octa, h)
        assert h.is_subset_of(n)
        assert n.order % h.order == 0


def test_class_representative_stable_under_conjugation():
    octa = octahedral()
    classes = enumerate_subgroups(octa)
    rep_of = {m: c.representative.indices for c in classes for m in c.members}
    for cls in classes:
        h = cls.representative
        for x in range(octa.order):
            conj = octa.conjugate_set(x, h.indices)
            assert rep_of[conj] == h.indices


def test_trivial_subgroup_helpers(s3_rep):
    g = s3_rep.group
    assert trivial_subgroup(g).order == 1
    assert full_subgroup(g).order == 6
