"""Exact toolkit for isotropy stratification and invariant rings of finite matrix groups.

Everything is computed over the rationals with no floating point: fixed loci,
normalizers and monodromy actions, graded invariant bases with Molien
cross-checks, closed-stratum equations, and rational expression of normal-form
invariants in restricted global invariants.
"""

from ._core import BACKEND
from .exact import (
    ExactMatrix,
    LinearSubspace,
    determinant,
    format_scalar,
    kernel_basis,
    parse_scalar,
    rank,
    rref,
    subspace_equal,
)
from .groups import (
    FiniteMatrixGroup,
    GroupNotFiniteWithinCap,
    NonInvertibleGenerator,
    QuotientGroup,
    SubgroupClass,
    SubgroupHandle,
    are_conjugate,
    close_group,
    enumerate_subgroups,
    normalizer,
    quotient,
    subgroup_from_matrices,
)
from .invariants import (
    GeneratorSet,
    InvariantBasisAtDegree,
    invariant_basis,
    minimal_generators,
    molien_dims,
    reynolds,
    verify_invariant,
)
from .poly import (
    MultiPoly,
    TruncatedSeries,
    act,
    laplacian,
    monomial_basis,
    parse_polynomial,
    restrict_to_subspace,
    substitute,
)
from .rationality import (
    NoSolutionWithinBound,
    RationalInvariantExpression,
    RestrictedInvariantSet,
    TargetNotMonodromyInvariant,
    expressions_equivalent,
    rationalize,
    restrict_invariants,
)
from .reps import (
    ClosedSubgroupSpec,
    NoLieAction,
    RepresentationSpec,
    character_fixed_dim,
    fixed_locus,
    harmonic_rep,
    lie_stabilizer_algebra,
    matrix_rep,
    orthogonal_slice,
    permutation_rep,
    stabilizer,
)
from .strata import (
    MonodromyRep,
    NotAnIsotropyClassError,
    StratumRecord,
    closed_stratum_equations,
    isotropy_classes,
    monodromy_rep,
    open_fixed_witness,
    principal_isotropy,
    stratum_membership,
)

__version__ = "0.1.0"
