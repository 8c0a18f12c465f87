"""Structure-constant algebras with a delta-twisted bracket.

A table stores the coefficients c[i][j][k] of [b_i, b_j] in a fixed basis
together with the sign delta in {+1, -1}.  Validity of the bracket axioms

    (1)  [x, y] = -delta [y, x]
    (2)  [x, [y, z]] = delta [[x, y], z] + delta [y, [x, z]]

is a checked predicate, not a construction invariant, so broken tables can
be loaded and diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    basis_vector,
    kernel,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)

DEFAULT_ORACLE_CAP = 12


class OracleCapExceeded(ValueError):
    """The brute-force ideal search was asked to run above its size cap."""


@dataclass(frozen=True)
class StructureTable:
    """Bilinear product on Q^dim given by structure constants.

    ``c[i][j]`` is the coordinate vector of the product of basis vectors
    i and j.  With delta = -1 the product may be symmetric and [x, x]
    nonzero, so no symmetry completion is ever applied.
    """

    dim: int
    delta: int
    c: tuple[tuple[Vector, ...], ...]
    basis_names: tuple[str, ...]

    def __post_init__(self):
        if self.delta not in (1, -1):
            raise ValueError("delta must be +1 or -1")
        if len(self.c) != self.dim or any(
            len(ci) != self.dim or any(len(cij) != self.dim for cij in ci)
            for ci in self.c
        ):
            raise ValueError("structure constants must form a dim^3 grid")
        if len(self.basis_names) != self.dim:
            raise ValueError("need one basis name per dimension")
        if len(set(self.basis_names)) != self.dim:
            raise ValueError("basis names must be unique")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        delta: int,
        brackets: dict[tuple[int, int], dict[int, Fraction]],
        basis_names=None,
    ) -> StructureTable:
        """Build a table from sparse {(i, j): {k: coeff}} bracket data."""
        grid = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), result in brackets.items():
            for k, coeff in result.items():
                grid[i][j][k] = Fraction(coeff)
        if basis_names is None:
            basis_names = tuple(f"b{i}" for i in range(dim))
        return cls(
            dim,
            delta,
            tuple(tuple(tuple(row) for row in plane) for plane in grid),
            tuple(basis_names),
        )

    def basis_index(self, name: str) -> int:
        return self.basis_names.index(name)

    def basis_element(self, i: int) -> Vector:
        return basis_vector(self.dim, i)


def bracket(table: StructureTable, x: Vector, y: Vector) -> Vector:
    """Bilinear product of two coordinate vectors, exact."""
    n = table.dim
    if len(x) != n or len(y) != n:
        raise ValueError("element dimension does not match the algebra")
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        ci = table.c[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            f = xi * yj
            for k, ck in enumerate(ci[j]):
                if ck != 0:
                    out[k] += f * ck
    return tuple(out)


def _bracket_right_basis(table: StructureTable, x: Vector, j: int) -> Vector:
    """[x, b_j] without materializing the basis vector."""
    out = zero_vector(table.dim)
    for i, xi in enumerate(x):
        if xi != 0:
            out = vec_add(out, vec_scale(table.c[i][j], xi))
    return out


def _bracket_left_basis(table: StructureTable, j: int, x: Vector) -> Vector:
    """[b_j, x] without materializing the basis vector."""
    out = zero_vector(table.dim)
    for m, xm in enumerate(x):
        if xm != 0:
            out = vec_add(out, vec_scale(table.c[j][m], xm))
    return out


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the two bracket axioms on all basis tuples.

    Bilinearity makes the basis checks sufficient.  Violations carry the
    exact nonzero residual vector so a broken constant is localized.
    """

    dim: int
    delta: int
    antisymmetry_violations: tuple[tuple[int, int, Vector], ...]
    jacobi_violations: tuple[tuple[int, int, int, Vector], ...]

    @property
    def passed(self) -> bool:
        return not self.antisymmetry_violations and not self.jacobi_violations


def check_axioms(table: StructureTable) -> AxiomReport:
    n, d = table.dim, table.delta
    anti = []
    for i in range(n):
        for j in range(n):
            residual = vec_add(table.c[i][j], vec_scale(table.c[j][i], Fraction(d)))
            if not vec_is_zero(residual):
                anti.append((i, j, residual))
    jacobi = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = _bracket_left_basis(table, i, table.c[j][k])
                rhs = vec_add(
                    _bracket_right_basis(table, table.c[i][j], k),
                    _bracket_left_basis(table, j, table.c[i][k]),
                )
                residual = vec_sub(lhs, vec_scale(rhs, Fraction(d)))
                if not vec_is_zero(residual):
                    jacobi.append((i, j, k, residual))
    return AxiomReport(n, d, tuple(anti), tuple(jacobi))


def ad_matrix(table: StructureTable, x: Vector) -> Matrix:
    """Matrix of y -> delta [x, y] in the table's basis."""
    n = table.dim
    cols = [
        vec_scale(_bracket_right_basis(table, x, j), Fraction(table.delta))
        for j in range(n)
    ]
    return Matrix(tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)), n)


def center(table: StructureTable) -> Subspace:
    """{v : [v, b_j] = 0 for all j}, via one stacked kernel computation."""
    n = table.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(table.c[i][j][k] for i in range(n)))
    return kernel(Matrix(tuple(rows), n))


def derived(table: StructureTable) -> Subspace:
    """Canonical span of all products of basis vectors."""
    return Subspace.span(
        table.dim, [table.c[i][j] for i in range(table.dim) for j in range(table.dim)]
    )


def ideal_closure(table: StructureTable, seed: Subspace) -> Subspace:
    """Smallest subspace containing ``seed`` closed under both-sided products.

    Fixed-point iteration adjoining [s, b_j] and [b_j, s]; the dimension
    grows every round, so it terminates within dim steps.
    """
    if seed.ambient_dim != table.dim:
        raise ValueError("seed ambient dimension does not match the algebra")
    current = seed
    while True:
        rows = list(current.basis)
        for s in current.basis:
            for j in range(table.dim):
                rows.append(_bracket_right_basis(table, s, j))
                rows.append(_bracket_left_basis(table, j, s))
        grown = Subspace.span(table.dim, rows)
        if grown.dim == current.dim:
            return grown
        current = grown


def is_ideal(table: StructureTable, subspace: Subspace) -> bool:
    """True iff the subspace absorbs basis products on both sides."""
    if subspace.ambient_dim != table.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    for s in subspace.basis:
        for j in range(table.dim):
            if not subspace.contains(_bracket_right_basis(table, s, j)):
                return False
            if not subspace.contains(_bracket_left_basis(table, j, s)):
                return False
    return True


def minimal_ideals_oracle(
    table: StructureTable, cap: int = DEFAULT_ORACLE_CAP
) -> list[Subspace]:
    """Brute-force enumeration of minimal nonzero ideals.

    Takes the ideal closure of every basis line and of every line spanned
    by a pairwise sum of basis vectors, then keeps the inclusion-minimal
    nonzero closures.  This seed set is a documented heuristic: it is
    complete for the bundled test algebras (checked against their known
    ideal lattices) but is not a general minimal-ideal decision procedure,
    since the rational lines of a space cannot be exhausted.
    """
    if table.dim > cap:
        raise OracleCapExceeded(
            f"algebra dimension {table.dim} exceeds the oracle cap {cap}"
        )
    seeds = [basis_vector(table.dim, i) for i in range(table.dim)]
    for i in range(table.dim):
        for j in range(i + 1, table.dim):
            seeds.append(
                vec_add(basis_vector(table.dim, i), basis_vector(table.dim, j))
            )
    closures = set()
    for seed in seeds:
        closure = ideal_closure(table, Subspace.span(table.dim, [seed]))
        if closure.dim > 0:
            closures.add(closure)
    minimal = [
        ideal
        for ideal in closures
        if not any(
            other.dim < ideal.dim and other.is_subspace_of(ideal)
            for other in closures
        )
    ]
    return sorted(minimal, key=lambda s: (s.dim, s.basis))


def random_element(table: StructureTable, rng, bound: int = 5) -> Vector:
    """Random rational coordinate vector, for randomized exact testing."""
    return vector(
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(table.dim)
    )
