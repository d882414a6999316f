"""Representations of finite matrix groups, with optional infinitesimal data.

A RepresentationSpec couples a source group (the matrices the user wrote
down, e.g. 3x3 rotations) with one action matrix per element on the module
space V.  Connected groups never appear as elements: they enter only through
a finite subgroup plus derivation matrices for a basis of the Lie algebra,
which keeps every computation exact.  The two views coincide for permutation
and plain matrix representations, where the source matrices act directly.

Harmonic representations realize the degree-d harmonic polynomials in three
variables as the kernel of the Laplacian inside the degree-d coefficient
space, with the canonical RREF kernel basis as coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .exact import (
    ONE,
    ZERO,
    ExactMatrix,
    LinearSubspace,
    as_scalar,
    is_positive_definite,
    kernel_basis,
    kernel_with_free,
    stack,
)
from .groups import FiniteMatrixGroup, SubgroupHandle, close_group
from .poly import MultiPoly, monomial_exponents

Vector = tuple[Fraction, ...]


class NoLieAction(Exception):
    pass


@dataclass(frozen=True)
class ClosedSubgroupSpec:
    """A closed subgroup given by finite source-matrix generators and/or Lie elements.

    Lie elements are either names of the representation's Lie basis matrices or
    rational coefficient vectors over that basis.  Used for subgroups like
    O(2) inside SO(3) that are not finite.
    """

    label: str
    finite_generators: tuple[ExactMatrix, ...] = ()
    lie_generators: tuple[str | tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        if not self.finite_generators and not self.lie_generators:
            raise ValueError("closed subgroup spec needs at least one generator")


class RepresentationSpec:
    """A finite group acting on V, optionally with Lie algebra derivations."""

    def __init__(
        self,
        group: FiniteMatrixGroup,
        action: Sequence[ExactMatrix],
        coordinates: Sequence[str],
        matrix_action: Callable[[ExactMatrix], ExactMatrix] | None = None,
        lie_names: Sequence[str] = (),
        lie_matrices: Sequence[ExactMatrix] = (),
        inner_product: ExactMatrix | None = None,
    ):
        self.group = group
        self.action = tuple(action)
        self.coordinates = tuple(coordinates)
        self.dim = len(self.coordinates)
        self._matrix_action = matrix_action
        self.lie_names = tuple(lie_names)
        self.lie_matrices = tuple(lie_matrices)
        self.inner_product = inner_product
        self._validate()

    def _validate(self) -> None:
        g = self.group
        if len(self.action) != g.order:
            raise ValueError("need one action matrix per group element")
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValueError("action matrix size does not match the coordinate count")
        if not self.action[0].is_identity():
            raise ValueError("the identity element must act as the identity matrix")
        # homomorphism against the multiplication table; generators suffice
        for j in g.generator_indices:
            for i in range(g.order):
                if self.action[i] @ self.action[j] != self.action[g.table[i][j]]:
                    raise ValueError("action matrices do not form a homomorphism")
        if len(self.lie_names) != len(self.lie_matrices):
            raise ValueError("need one name per Lie matrix")
        for m in self.lie_matrices:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValueError("Lie matrix size does not match the coordinate count")
        self._validate_lie_brackets()
        if self.inner_product is not None:
            gram = self.inner_product
            if gram.rows != gram.transpose().rows:
                raise ValueError("inner product is not symmetric")
            if not is_positive_definite(gram):
                raise ValueError("inner product is not positive definite")
            for j in g.generator_indices:
                a = self.action[j]
                if a.transpose() @ gram @ a != gram:
                    raise ValueError("inner product is not invariant under the group action")
            for m in self.lie_matrices:
                if m.transpose() @ gram + gram @ m != ExactMatrix.zero(self.dim, self.dim):
                    raise ValueError("Lie matrices are not skew for the inner product")

    def _validate_lie_brackets(self) -> None:
        if not self.lie_matrices:
            return
        span = [[v for row in m.rows for v in row] for m in self.lie_matrices]
        from .exact import in_span

        for a in self.lie_matrices:
            for b in self.lie_matrices:
                bracket = a @ b - b @ a
                flat = [v for row in bracket.rows for v in row]
                if not in_span(span, flat):
                    raise ValueError("Lie matrices do not close under brackets")

    # -- lookups ------------------------------------------------------------

    def action_of_matrix(self, m: ExactMatrix) -> ExactMatrix:
        """Action matrix on V of an arbitrary source matrix (not necessarily a group element)."""
        if self._matrix_action is not None:
            return self._matrix_action(m)
        if m.nrows != self.dim or m.ncols != self.dim:
            raise ValueError("matrix size does not match the representation")
        return m

    def lie_matrix(self, spec: str | Sequence[int | str | Fraction]) -> ExactMatrix:
        if not self.lie_matrices:
            raise NoLieAction("representation has no Lie action")
        if isinstance(spec, str):
            try:
                return self.lie_matrices[self.lie_names.index(spec)]
            except ValueError:
                raise ValueError(f"unknown Lie generator {spec!r}; have {list(self.lie_names)}") from None
        coeffs = [as_scalar(c) for c in spec]
        if len(coeffs) != len(self.lie_matrices):
            raise ValueError("Lie coefficient vector has wrong length")
        total = ExactMatrix.zero(self.dim, self.dim)
        for c, m in zip(coeffs, self.lie_matrices):
            if c:
                total = total + m.scale(c)
        return total

    def inverse_action(self, i: int) -> ExactMatrix:
        return self.action[self.group.inverse[i]]

    def __repr__(self) -> str:
        return (
            f"RepresentationSpec(dim {self.dim}, group order {self.group.order},"
            f" lie {list(self.lie_names)!r})"
        )


# -- constructors ---------------------------------------------------------------


def _default_coordinates(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def permutation_matrix(images: Sequence[int], n: int) -> ExactMatrix:
    """Matrix of the permutation given in one-line notation (1-based images)."""
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"invalid permutation of 1..{n}: {list(images)}")
    rows = [[ZERO] * n for _ in range(n)]
    for i, img in enumerate(images):
        rows[img - 1][i] = ONE
    return ExactMatrix(rows)


def permutation_rep(
    perm_generators: Sequence[Sequence[int]],
    n: int,
    coordinates: Sequence[str] | None = None,
    cap: int = 10000,
) -> RepresentationSpec:
    """Representation by 0/1 permutation matrices on Q^n."""
    mats = [permutation_matrix(p, n) for p in perm_generators]
    group = close_group(mats, cap=cap)
    return RepresentationSpec(
        group,
        group.elements,
        coordinates or _default_coordinates(n),
        inner_product=ExactMatrix.identity(n),
    )


def matrix_rep(
    generators: Sequence[ExactMatrix],
    coordinates: Sequence[str] | None = None,
    inner_product: ExactMatrix | None = None,
    cap: int = 10000,
) -> RepresentationSpec:
    """Representation where the source matrices act directly on Q^n.

    When no inner product is supplied, the identity is used if invariant;
    otherwise the group-averaged Gram sum(g^T g)/|G| is taken, which is always
    invariant and positive definite.
    """
    group = close_group(generators, cap=cap)
    n = group.dim
    if inner_product is None:
        candidate = ExactMatrix.identity(n)
        if all(m.transpose() @ candidate @ m == candidate for m in group.elements):
            inner_product = candidate
        else:
            total = ExactMatrix.zero(n, n)
            for m in group.elements:
                total = total + (m.transpose() @ m)
            inner_product = total.scale(Fraction(1, group.order))
    return RepresentationSpec(
        group,
        group.elements,
        coordinates or _default_coordinates(n),
        inner_product=inner_product,
    )


_XYZ = ("x", "y", "z")


def harmonic_basis(d: int) -> tuple[list[MultiPoly], list[int]]:
    """Canonical basis of degree-d harmonics in x, y, z and its free-column indices.

    The basis is the RREF kernel basis of the Laplacian on the degree-d
    monomial slice; a harmonic q has coordinates (coefficient of q at each
    free monomial), because the kernel basis is the identity on free columns.
    """
    monos = monomial_exponents(3, d)
    if d < 2:
        basis = [MultiPoly.monomial(_XYZ, e) for e in monos]
        return basis, list(range(len(monos)))
    lower = monomial_exponents(3, d - 2)
    lower_index = {e: i for i, e in enumerate(lower)}
    rows = [[ZERO] * len(monos) for _ in lower]
    for j, e in enumerate(monos):
        for axis in range(3):
            k = e[axis]
            if k >= 2:
                e2 = list(e)
                e2[axis] = k - 2
                rows[lower_index[tuple(e2)]][j] += k * (k - 1)
    kern, free = kernel_with_free(ExactMatrix(rows))
    basis = [MultiPoly(_XYZ, {monos[i]: c for i, c in enumerate(vec) if c}) for vec in kern]
    return basis, free


def harmonic_coordinates(p: MultiPoly, d: int, free: Sequence[int]) -> Vector:
    """Coordinates of a degree-d harmonic polynomial in the canonical basis."""
    monos = monomial_exponents(3, d)
    return tuple(p.terms.get(monos[f], ZERO) for f in free)


def harmonic_rep(
    d: int,
    generators: Sequence[ExactMatrix],
    include_so3_lie: bool = False,
    coordinates: Sequence[str] | None = None,
    cap: int = 10000,
) -> RepresentationSpec:
    """Action of a finite rotation group on degree-d harmonic polynomials.

    Each orthogonal source matrix g acts by substitution p -> p o g^{-1}; the
    optional Lie data adds the three rotation derivations (x dy - y dx and
    cyclic).  The invariant inner product is the Fischer form
    <p, q> = sum_a a! p_a q_a, which orthogonal substitutions preserve.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    for g in generators:
        if g.nrows != 3 or g.ncols != 3:
            raise ValueError("harmonic representations need 3x3 generators")
        if g.transpose() @ g != ExactMatrix.identity(3):
            raise ValueError("generators must be orthogonal matrices with rational entries")
    basis, free = harmonic_basis(d)
    dim = len(basis)
    if dim != (2 * d + 1 if d else 1):
        raise AssertionError("harmonic space has unexpected dimension")
    group = close_group(generators, cap=cap)

    from .poly import act  # local import to avoid a cycle at module load

    def action_of(m: ExactMatrix) -> ExactMatrix:
        if m.nrows != 3 or m.ncols != 3:
            raise ValueError("harmonic action expects a 3x3 source matrix")
        if m.transpose() @ m != ExactMatrix.identity(3):
            raise ValueError("harmonic action expects an orthogonal source matrix")
        inverse = m.inverse()
        cols = [harmonic_coordinates(act(inverse, b), d, free) for b in basis]
        return ExactMatrix(list(zip(*cols)))

    action = [action_of(m) for m in group.elements]
    lie_names: tuple[str, ...] = ()
    lie_matrices: list[ExactMatrix] = []
    if include_so3_lie:
        lie_names = ("Lx", "Ly", "Lz")
        for a, b in ((1, 2), (2, 0), (0, 1)):
            # derivation x_a d/dx_b - x_b d/dx_a for axis pairs (y,z), (z,x), (x,y)
            cols = []
            for p in basis:
                image = (
                    MultiPoly.variable(_XYZ, a) * p.derivative(b)
                    - MultiPoly.variable(_XYZ, b) * p.derivative(a)
                )
                cols.append(harmonic_coordinates(image, d, free))
            lie_matrices.append(ExactMatrix(list(zip(*cols))))
    gram_rows = [[ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i, dim):
            total = ZERO
            for e, c in basis[i].terms.items():
                c2 = basis[j].terms.get(e)
                if c2:
                    weight = factorial(e[0]) * factorial(e[1]) * factorial(e[2])
                    total += weight * c * c2
            gram_rows[i][j] = gram_rows[j][i] = total
    spec = RepresentationSpec(
        group,
        action,
        coordinates or tuple(f"a{i + 1}" for i in range(dim)),
        matrix_action=action_of,
        lie_names=lie_names,
        lie_matrices=lie_matrices,
        inner_product=ExactMatrix(gram_rows),
    )
    return spec


# -- pointwise queries -----------------------------------------------------------


def stabilizer(rep: RepresentationSpec, v: Sequence[Fraction]) -> SubgroupHandle:
    """Exact stabilizer of v inside the finite group."""
    if len(v) != rep.dim:
        raise ValueError("vector dimension does not match the representation")
    vec = tuple(as_scalar(x) for x in v)
    fixed = [i for i, m in enumerate(rep.action) if m.apply(vec) == vec]
    return SubgroupHandle(rep.group, fixed)


def fixed_locus(
    rep: RepresentationSpec, h: SubgroupHandle | ClosedSubgroupSpec, label: str = ""
) -> LinearSubspace:
    """V^H as the kernel of the stacked constraints {rho(h_i) - 1} and Lie matrices."""
    constraints: list[ExactMatrix] = []
    ident = ExactMatrix.identity(rep.dim)
    if isinstance(h, SubgroupHandle):
        if h.group is not rep.group:
            raise ValueError("subgroup does not belong to the representation's group")
        if not label:
            label = f"fixed locus of subgroup of order {h.order}"
        for i in h.indices:
            if i:
                constraints.append(rep.action[i] - ident)
    else:
        if not label:
            label = f"fixed locus of {h.label}"
        for m in h.finite_generators:
            constraints.append(rep.action_of_matrix(m) - ident)
        for spec in h.lie_generators:
            constraints.append(rep.lie_matrix(spec))
    if not constraints:
        basis = ExactMatrix.identity(rep.dim).rows
        return LinearSubspace(rep.dim, basis, label)
    kern = kernel_basis(stack(constraints))
    return LinearSubspace(rep.dim, kern, label)


def lie_stabilizer_algebra(rep: RepresentationSpec, v: Sequence[Fraction]) -> LinearSubspace:
    """Coefficient vectors X with X.v = 0; ambient dimension is the Lie basis size."""
    if not rep.lie_matrices:
        raise NoLieAction("representation has no Lie action")
    vec = tuple(as_scalar(x) for x in v)
    columns = [m.apply(vec) for m in rep.lie_matrices]
    matrix = ExactMatrix(list(zip(*columns)))
    return LinearSubspace(len(rep.lie_matrices), kernel_basis(matrix), "lie stabilizer")


def orbit_tangent(rep: RepresentationSpec, v: Sequence[Fraction]) -> list[Vector]:
    """Spanning vectors of the orbit tangent space at v (Lie images of v)."""
    vec = tuple(as_scalar(x) for x in v)
    return [m.apply(vec) for m in rep.lie_matrices]


def orthogonal_slice(rep: RepresentationSpec, v: Sequence[Fraction]) -> LinearSubspace:
    """Orthogonal complement of the orbit tangent space under the invariant inner product.

    Finite groups have discrete orbits, so without Lie data the tangent space
    is zero and the slice is all of V; v itself always lies in the slice.
    """
    if rep.inner_product is None:
        raise ValueError("representation has no inner product")
    vec = tuple(as_scalar(x) for x in v)
    if len(vec) != rep.dim:
        raise ValueError("vector dimension does not match the representation")
    tangent = [t for t in orbit_tangent(rep, vec) if any(x != 0 for x in t)]
    if not tangent:
        return LinearSubspace(rep.dim, ExactMatrix.identity(rep.dim).rows, "slice")
    constraint = ExactMatrix(tangent) @ rep.inner_product
    return LinearSubspace(rep.dim, kernel_basis(constraint), "slice")


def character_fixed_dim(rep: RepresentationSpec, h: SubgroupHandle) -> Fraction:
    """(1/|H|) sum of traces over H; equals dim V^H for exact representations."""
    total = sum((rep.action[i].trace() for i in h.indices), ZERO)
    return total / h.order


def restrict_action_matrix(
    rep: RepresentationSpec, element_index: int, subspace: LinearSubspace
) -> ExactMatrix:
    """Matrix of a group element on an invariant subspace, in the subspace basis."""
    cols = []
    for b in subspace.basis:
        image = rep.action[element_index].apply(b)
        cols.append(subspace.coordinates(image))
    return ExactMatrix(list(zip(*cols)) if cols else [], ncols=subspace.dim)
