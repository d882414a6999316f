"""Exact linear algebra: pinned examples plus structural properties."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isostrat.exact import (
    ExactMatrix,
    LinearSubspace,
    determinant,
    format_scalar,
    in_span,
    is_positive_definite,
    kernel_basis,
    parse_scalar,
    rank,
    rref,
    subspace_equal,
)

F = Fraction


def test_rref_collinear_rows():
    red, pivots = rref(ExactMatrix([[2, 4], [1, 2]]))
    assert red.rows == ((F(1), F(2)), (F(0), F(0)))
    assert pivots == [0]


def test_rref_identity():
    red, pivots = rref(ExactMatrix.identity(4))
    assert red == ExactMatrix.identity(4)
    assert pivots == [0, 1, 2, 3]


def test_rref_swap():
    red, pivots = rref(ExactMatrix([[0, 1], [1, 0]]))
    assert red == ExactMatrix.identity(2)
    assert pivots == [0, 1]


def test_kernel_full_rank_is_empty():
    assert kernel_basis(ExactMatrix.identity(3)) == []


def test_kernel_zero_matrix_is_standard_basis():
    assert kernel_basis(ExactMatrix.zero(2, 3)) == [
        (F(1), F(0), F(0)),
        (F(0), F(1), F(0)),
        (F(0), F(0), F(1)),
    ]


def test_kernel_sum_row():
    assert kernel_basis(ExactMatrix([[1, 1, 1]])) == [
        (F(-1), F(1), F(0)),
        (F(-1), F(0), F(1)),
    ]


def test_subspace_equal_examples():
    assert subspace_equal([[F(1), F(0)]], [[F(2), F(0)]], 2)
    assert not subspace_equal([[F(1), F(0)]], [[F(0), F(1)]], 2)
    assert subspace_equal([[F(1), F(1)], [F(1), F(-1)]], [[F(1), F(0)], [F(0), F(1)]], 2)


def test_subspace_equal_dimension_mismatch():
    with pytest.raises(ValueError):
        subspace_equal([[F(1), F(0)]], [[F(1), F(0), F(0)]], 2)


def _random_matrix(rng: random.Random, nrows: int, ncols: int) -> ExactMatrix:
    return ExactMatrix(
        [
            [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(ncols)]
            for _ in range(nrows)
        ]
    )


def test_kernel_vectors_annihilate_exactly():
    rng = random.Random(7)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        basis = kernel_basis(m)
        assert rank(m) + len(basis) == m.ncols
        for v in basis:
            assert all(x == 0 for x in m.apply(v))


def test_rref_idempotent():
    rng = random.Random(11)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        red, pivots = rref(m)
        again, pivots2 = rref(red)
        assert again == red
        assert pivots2 == pivots


@given(
    num=st.integers(min_value=-10**9, max_value=10**9).filter(lambda n: n != 0),
    den=st.integers(min_value=1, max_value=10**9),
)
def test_scalar_roundtrip_multiplicative(num, den):
    a = F(num, den)
    assert a * (1 / a) == 1


@given(num=st.integers(-10**12, 10**12), den=st.integers(1, 10**6))
@settings(max_examples=60)
def test_scalar_text_roundtrip(num, den):
    a = F(num, den)
    assert parse_scalar(format_scalar(a)) == a


def test_parse_scalar_rejects_floats_and_zero_division():
    with pytest.raises(ValueError):
        parse_scalar("1.5")
    with pytest.raises(ValueError):
        parse_scalar("1/0")
    assert parse_scalar("-3/6") == F(-1, 2)


def test_inverse_and_determinant():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert m @ m.inverse() == ExactMatrix.identity(2)
    assert determinant(m) == -2
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_positive_definite():
    assert is_positive_definite(ExactMatrix([[2, 1], [1, 2]]))
    assert not is_positive_definite(ExactMatrix([[1, 2], [2, 1]]))


def test_subspace_coordinates_roundtrip():
    sub = LinearSubspace(3, [[1, 1, 0], [0, 0, 1]])
    v = sub.point((F(3), F(-2)))
    assert v == (F(3), F(3), F(-2))
    assert sub.coordinates(v) == (F(3), F(-2))
    assert sub.contains(v)
    assert not sub.contains((F(1), F(2), F(0)))
    with pytest.raises(ValueError):
        sub.coordinates((F(1), F(2), F(0)))


def test_subspace_equality_ignores_basis_choice():
    a = LinearSubspace(2, [[1, 1], [1, -1]])
    b = LinearSubspace(2, [[1, 0], [0, 1]])
    assert a == b
    assert hash(a) == hash(b)
    assert a != LinearSubspace(2, [[1, 0]])


def test_in_span():
    assert in_span([[F(1), F(1), F(0)]], (F(2), F(2), F(0)))
    assert not in_span([[F(1), F(1), F(0)]], (F(1), F(0), F(0)))
    assert in_span([], (F(0), F(0)))
    assert not in_span([], (F(1), F(0)))


def test_backends_agree_on_random_matrices():
    from isostrat._elim import rref_scaled as pure

    try:
        from isostrat._elim_c import rref_scaled as compiled
    except ImportError:
        pytest.skip("compiled elimination core not built")
    rng = random.Random(3)
    for _ in range(40):
        nrows = rng.randint(1, 7)
        ncols = rng.randint(1, 7)
        rows = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
        a = [list(r) for r in rows]
        b = [list(r) for r in rows]
        assert pure(a, ncols) == compiled(b, ncols)
