"""Rationality solver: restriction, the paper-level worked examples, normalization."""

from __future__ import annotations

from fractions import Fraction

import pytest

from isostrat.exact import ExactMatrix, LinearSubspace
from isostrat.groups import subgroup_from_matrices
from isostrat.poly import parse_polynomial
from isostrat.rationality import (
    NoSolutionWithinBound,
    TargetNotMonodromyInvariant,
    expression_from_strings,
    expressions_equivalent,
    rationalize,
    restrict_invariants,
)
from isostrat.reps import fixed_locus
from isostrat.strata import monodromy_rep

F = Fraction
XYZ = ("x", "y", "z")


@pytest.fixture(scope="module")
def symmetric_jset():
    plane = LinearSubspace(3, [[1, 1, 0], [0, 0, 1]], "plane x=y")
    named = [
        ("sigma1", parse_polynomial("x+y+z", XYZ)),
        ("sigma2", parse_polynomial("x*y+x*z+y*z", XYZ)),
        ("sigma3", parse_polynomial("x*y*z", XYZ)),
    ]
    return restrict_invariants(named, plane)


@pytest.fixture(scope="module")
def axis_jset():
    # the fixed line of the axial subgroup, parameterized by diag(-1,-1,2):
    # tr A^2 -> 6 s1^2 and tr A^3 -> 6 s1^3
    line = LinearSubspace(1, [[1]], "axis line")
    named = [
        ("I2", parse_polynomial("6*x^2", ("x",))),
        ("I3", parse_polynomial("6*x^3", ("x",))),
    ]
    return restrict_invariants(named, line)


def test_restrict_invariants_symmetric(symmetric_jset):
    s_vars = ("s1", "s2")
    assert symmetric_jset.polynomials == (
        parse_polynomial("2*s1+s2", s_vars),
        parse_polynomial("s1^2+2*s1*s2", s_vars),
        parse_polynomial("s1^2*s2", s_vars),
    )
    assert symmetric_jset.degrees == (1, 2, 3)
    assert symmetric_jset.zero_flags == (False, False, False)


def test_restrict_invariants_trace_powers(axis_jset):
    assert [str(p) for p in axis_jset.polynomials] == ["6*s1^2", "6*s1^3"]


def test_restrict_on_identity_basis_is_identity():
    full = LinearSubspace(3, ExactMatrix.identity(3).rows)
    p = parse_polynomial("x^2*y - z^3", XYZ)
    restricted = restrict_invariants([("p", p)], full)
    assert str(restricted.polynomials[0]) == str(p).replace("x", "s1").replace(
        "y", "s2"
    ).replace("z", "s3")


def test_paper_formula_for_x(symmetric_jset):
    target = parse_polynomial("s1", ("s1", "s2"))
    expr = rationalize(target, symmetric_jset)
    paper = expression_from_strings(
        "sigma1*sigma2-9*sigma3", "2*sigma1^2-6*sigma2", symmetric_jset.names
    )
    assert expressions_equivalent(expr, paper, symmetric_jset)


def test_paper_formula_for_z(symmetric_jset):
    target = parse_polynomial("s2", ("s1", "s2"))
    expr = rationalize(target, symmetric_jset)
    paper = expression_from_strings(
        "sigma1^3-4*sigma1*sigma2+9*sigma3", "sigma1^2-3*sigma2", symmetric_jset.names
    )
    assert expressions_equivalent(expr, paper, symmetric_jset)


def test_lambda_equals_ratio_of_traces(axis_jset):
    target = parse_polynomial("s1", ("s1",))
    expr = rationalize(target, axis_jset)
    paper = expression_from_strings("I3", "I2", axis_jset.names)
    assert expressions_equivalent(expr, paper, axis_jset)


def test_defining_identity_holds(symmetric_jset):
    target = parse_polynomial("s1^2 - s2^2", ("s1", "s2"))
    expr = rationalize(target, symmetric_jset)
    a_of_j, b_of_j = expr.compose(symmetric_jset)
    assert target * b_of_j == a_of_j
    assert b_of_j.evaluate(expr.witness_point) != 0


def test_denominator_is_monic(symmetric_jset):
    target = parse_polynomial("s1", ("s1", "s2"))
    expr = rationalize(target, symmetric_jset)
    lead = max(expr.denominator.terms, key=lambda e: (sum(e), e))
    assert expr.denominator.terms[lead] == 1


def test_idempotent_soundness(symmetric_jset):
    for k, name in enumerate(symmetric_jset.names):
        expr = rationalize(symmetric_jset.polynomials[k], symmetric_jset)
        direct = expression_from_strings(name, "1", symmetric_jset.names)
        assert expressions_equivalent(expr, direct, symmetric_jset)


def test_degree_monotonicity(symmetric_jset):
    target = parse_polynomial("s1", ("s1", "s2"))
    base = rationalize(target, symmetric_jset, max_weighted_degree=3)
    for bound in (4, 6, 12):
        again = rationalize(target, symmetric_jset, max_weighted_degree=bound)
        assert again.numerator == base.numerator
        assert again.denominator == base.denominator


def test_no_solution_within_small_bound(axis_jset):
    target = parse_polynomial("s1", ("s1",))
    with pytest.raises(NoSolutionWithinBound):
        rationalize(target, axis_jset, max_weighted_degree=1)


def test_monodromy_rejection(h4_rep):
    d2 = subgroup_from_matrices(
        h4_rep.group,
        [ExactMatrix.diagonal([1, -1, -1]), ExactMatrix.diagonal([-1, 1, -1])],
    )
    locus = fixed_locus(h4_rep, d2)
    mono = monodromy_rep(h4_rep, d2)
    named = [("q", parse_polynomial("+".join(f"{c}^2" for c in h4_rep.coordinates), h4_rep.coordinates))]
    jset = restrict_invariants(named, locus)
    s_vars = jset.coordinates or ("s1", "s2", "s3")
    bad_target = parse_polynomial("s1", ("s1", "s2", "s3"))
    with pytest.raises(TargetNotMonodromyInvariant):
        rationalize(bad_target, jset, monodromy=mono.matrices)


def test_equivalence_examples(axis_jset):
    e1 = expression_from_strings("I3", "I2", axis_jset.names)
    e2 = expression_from_strings("2*I3", "2*I2", axis_jset.names)
    e3 = expression_from_strings("I2", "I3", axis_jset.names)
    assert expressions_equivalent(e1, e2, axis_jset)
    assert not expressions_equivalent(e1, e3, axis_jset)


def test_zero_restriction_flagged_and_unused():
    line = LinearSubspace(2, [[1, 0]])
    named = [
        ("a", parse_polynomial("x^2", ("x", "y"))),
        ("b", parse_polynomial("y^2", ("x", "y"))),  # restricts to zero
    ]
    jset = restrict_invariants(named, line)
    assert jset.zero_flags == (False, True)
    expr = rationalize(parse_polynomial("s1^2", ("s1",)), jset)
    assert expressions_equivalent(
        expr, expression_from_strings("a", "1", jset.names), jset
    )
