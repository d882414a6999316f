"""Invariant rings: graded bases vs Molien, Reynolds, generators, verification."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest

from isostrat.exact import ExactMatrix, rank
from isostrat.groups import subgroup_from_matrices
from isostrat.invariants import (
    characteristic_polynomial,
    invariant_basis,
    minimal_generators,
    molien_dims,
    reynolds,
    verify_invariant,
)
from isostrat.poly import (
    MultiPoly,
    act,
    coefficient_vector,
    monomial_exponents,
    parse_polynomial,
)
from isostrat.reps import matrix_rep, permutation_rep

F = Fraction


def _orbit_count_oracle(d: int) -> int:
    """Invariant dimension of the S3 permutation action: monomial orbits.

    Counting exponent multisets is independent of both the kernel and the
    Molien computations.
    """
    seen = set()
    for e in monomial_exponents(3, d):
        seen.add(tuple(sorted(e)))
    return len(seen)


def test_molien_s3_matches_orbit_count(s3_rep):
    dims = molien_dims(s3_rep, 8)
    assert dims[:5] == [1, 1, 2, 3, 4]
    for d in range(9):
        assert dims[d] == _orbit_count_oracle(d)


def test_molien_trivial_group():
    triv = permutation_rep([[1, 2, 3]], 3)
    dims = molien_dims(triv, 6)
    for d in range(7):
        assert dims[d] == comb(3 + d - 1, d)


def test_molien_sign_action_kills_odd_degrees(sign_rep):
    dims = molien_dims(sign_rep, 7)
    assert all(dims[d] == 0 for d in (1, 3, 5, 7))
    assert dims[2] == 3


def test_characteristic_polynomial_small_cases():
    m = ExactMatrix([[2, 0], [0, 3]])
    assert characteristic_polynomial(m) == [F(1), F(-5), F(6)]
    rot = ExactMatrix([[0, -1], [1, 0]])
    assert characteristic_polynomial(rot) == [F(1), F(0), F(1)]


def test_invariant_basis_examples(s3_rep):
    deg1 = invariant_basis(s3_rep, 1)
    assert deg1.dim == 1
    assert deg1.basis[0] == parse_polynomial("x+y+z", ("x", "y", "z"))
    assert invariant_basis(s3_rep, 2).dim == 2
    triv = permutation_rep([[1, 2, 3]], 3)
    assert invariant_basis(triv, 3).dim == comb(5, 3)


def test_invariant_basis_matches_molien_for_three_actions(s3_rep, sign_rep, h2_rep):
    for rep in (s3_rep, sign_rep, h2_rep):
        dims = molien_dims(rep, 8)
        for d in range(9):
            assert invariant_basis(rep, d).dim == dims[d]


def test_reynolds_examples(s3_rep, sign_rep):
    x = parse_polynomial("x", ("x", "y", "z"))
    avg = reynolds(s3_rep, x)
    assert avg == parse_polynomial("1/3*x+1/3*y+1/3*z", ("x", "y", "z"))
    assert reynolds(s3_rep, avg) == avg
    sigma2 = parse_polynomial("x*y+x*z+y*z", ("x", "y", "z"))
    assert reynolds(s3_rep, sigma2) == sigma2
    assert reynolds(sign_rep, parse_polynomial("x", ("x", "y"))).is_zero()


def test_reynolds_projects_into_invariant_basis(s3_rep):
    rng = random.Random(3)
    for d in range(1, 6):
        monos = monomial_exponents(3, d)
        space = invariant_basis(s3_rep, d)
        span = [coefficient_vector(b, monos) for b in space.basis]
        for _ in range(3):
            p = MultiPoly(
                ("x", "y", "z"), {e: F(rng.randint(-5, 5)) for e in monos}
            )
            image = reynolds(s3_rep, p)
            if image.is_zero():
                continue
            vec = coefficient_vector(image, monos)
            base_rank = rank(ExactMatrix(span, ncols=len(monos))) if span else 0
            assert rank(ExactMatrix(span + [vec], ncols=len(monos))) == base_rank
            assert reynolds(s3_rep, image) == image


def test_minimal_generators_s3_match_symmetric_functions(s3_rep):
    gens = minimal_generators(s3_rep)
    assert gens.degrees == (1, 2, 3)
    assert gens.complete
    xyz = ("x", "y", "z")
    sigmas = [
        parse_polynomial("x+y+z", xyz),
        parse_polynomial("x*y+x*z+y*z", xyz),
        parse_polynomial("x*y*z", xyz),
    ]
    # graded spans of the two subalgebras agree degree by degree up to 8
    for d in range(1, 9):
        monos = monomial_exponents(3, d)
        ours = _graded_span(list(gens.polynomials), list(gens.degrees), d, monos)
        theirs = _graded_span(sigmas, [1, 2, 3], d, monos)
        assert _same_span(ours, theirs, len(monos))


def _graded_span(gens, degrees, d, monos):
    from isostrat.invariants import _products_of_degree

    return [coefficient_vector(p, monos) for p in _products_of_degree(gens, degrees, d)]


def _same_span(a, b, ncols):
    ra = rank(ExactMatrix(a, ncols=ncols)) if a else 0
    rb = rank(ExactMatrix(b, ncols=ncols)) if b else 0
    joint = rank(ExactMatrix(a + b, ncols=ncols)) if (a or b) else 0
    return ra == rb == joint


def test_minimal_generators_sign_action(sign_rep):
    gens = minimal_generators(sign_rep)
    assert gens.degrees == (2, 2, 2)
    monos = monomial_exponents(2, 2)
    got = [coefficient_vector(p, monos) for p in gens.polynomials]
    expected = [
        coefficient_vector(parse_polynomial(t, ("x", "y")), monos)
        for t in ("x^2", "x*y", "y^2")
    ]
    assert _same_span(got, expected, len(monos))
    # brute force: no new generators appear at degrees 3 and 4
    for d in (3, 4):
        monos_d = monomial_exponents(2, d)
        space = invariant_basis(sign_rep, d)
        span = _graded_span(list(gens.polynomials), list(gens.degrees), d, monos_d)
        full = [coefficient_vector(b, monos_d) for b in space.basis]
        assert _same_span(span, full, len(monos_d))


def test_minimal_generators_trivial_group_line():
    triv = matrix_rep([ExactMatrix([[1]])], ("x",))
    gens = minimal_generators(triv)
    assert [str(p) for p in gens.polynomials] == ["x"]


def test_minimal_generators_flags_capped_runs(h2_rep):
    gens = minimal_generators(h2_rep, degree_cap=4)
    assert not gens.complete
    assert gens.bound_used == 4


def test_generators_pass_verification(s3_rep, sign_rep):
    for rep in (s3_rep, sign_rep):
        for p in minimal_generators(rep).polynomials:
            assert verify_invariant(rep, p).invariant


def test_verify_invariant_infinitesimally(h2_rep, h2_session_text):
    import json

    doc = json.loads(h2_session_text)
    for name in ("I2", "I3"):
        p = parse_polynomial(doc["invariants"][name], h2_rep.coordinates)
        assert verify_invariant(h2_rep, p).invariant


def test_verify_invariant_failure_witness(s3_rep):
    result = verify_invariant(s3_rep, parse_polynomial("x", ("x", "y", "z")))
    assert not result.invariant
    assert result.witness_kind == "group"
    witness = s3_rep.group.elements[result.witness_index]
    # the witness actually moves the polynomial
    assert act(witness, parse_polynomial("x", ("x", "y", "z"))) != parse_polynomial(
        "x", ("x", "y", "z")
    )


def test_orbit_constancy_of_computed_invariants(s3_rep):
    rng = random.Random(55)
    gens = minimal_generators(s3_rep)
    for _ in range(10):
        v = tuple(F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(3))
        g = rng.randrange(s3_rep.group.order)
        gv = s3_rep.action[g].apply(v)
        for p in gens.polynomials:
            assert p.evaluate(v) == p.evaluate(gv)
