"""Exact linear algebra over the rationals.

Every value in this module is built from ``fractions.Fraction``; there is
no floating point and no tolerance anywhere.  Subspaces are stored in a
canonical reduced-row-echelon basis, so subspace equality is plain value
equality and all reports built on top of them are reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")


class NotSplitError(Exception):
    """Raised when a matrix has no full rational eigenbasis."""


def parse_rational(text: str) -> Fraction:
    """Parse a ``"p"`` or ``"p/q"`` literal into a reduced Fraction."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p"`` or ``"p/q"`` with positive q."""
    return str(value)


def vector(values) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(u: Vector, c: Fraction) -> Vector:
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


def vec_dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


@dataclass(frozen=True)
class Matrix:
    """Immutable rectangular matrix of Fractions.

    ``cols`` is stored explicitly so matrices with zero rows keep a width.
    """

    entries: tuple[Vector, ...]
    cols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> Matrix:
        rows = tuple(vector(r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cannot infer width of an empty matrix")
            cols = len(rows[0])
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(tuple(basis_vector(n, i) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls(tuple(zero_vector(ncols) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def transpose(self) -> Matrix:
        return Matrix(
            tuple(
                tuple(self.entries[i][j] for i in range(self.nrows))
                for j in range(self.cols)
            ),
            self.nrows,
        )

    def add(self, other: Matrix) -> Matrix:
        if (self.nrows, self.cols) != (other.nrows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries)),
            self.cols,
        )

    def sub(self, other: Matrix) -> Matrix:
        return self.add(other.scale(Fraction(-1)))

    def scale(self, c: Fraction) -> Matrix:
        return Matrix(tuple(vec_scale(row, c) for row in self.entries), self.cols)

    def mul(self, other: Matrix) -> Matrix:
        if self.cols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        return Matrix(
            tuple(tuple(vec_dot(row, col) for col in cols) for row in self.entries),
            other.cols,
        )

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(vec_dot(row, v) for row in self.entries)

    def trace(self) -> Fraction:
        if self.nrows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for row in self.entries)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns.

    The result is the unique RREF of ``m``; zero rows end up at the
    bottom and rank equals the number of pivots.
    """
    rows = [list(r) for r in m.entries]
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(tuple(tuple(row) for row in rows), m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held as a canonical RREF basis, zero rows removed.

    Two subspaces are equal exactly when they are the same subspace, so
    instances can be hashed, compared and embedded in golden output.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors_) -> Subspace:
        rows = tuple(vector(v) for v in vectors_)
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not rows:
            return cls(ambient_dim, ())
        reduced, pivots = rref(Matrix(rows, ambient_dim))
        return cls(ambient_dim, reduced.entries[: len(pivots)])

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim).entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Vector) -> bool:
        return self.coordinates(v) is not None

    def coordinates(self, v: Vector) -> tuple[Fraction, ...] | None:
        """Coefficients of ``v`` on the canonical basis, or None if outside.

        Because the basis is in RREF with unit pivot columns, the
        coefficient of basis row j is just the entry of ``v`` at that
        row's pivot; the expansion is then verified exactly.
        """
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        coords = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for coeff, row in zip(coords, self.basis):
            if coeff != 0:
                residual = [a - coeff * b for a, b in zip(residual, row)]
        if any(x != 0 for x in residual):
            return None
        return coords

    def is_subspace_of(self, other: Subspace) -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(other.contains(row) for row in self.basis)


def kernel(m: Matrix) -> Subspace:
    """Canonical basis of the right null space {v : m v = 0}."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][f]
        basis.append(tuple(v))
    return Subspace.span(m.cols, basis)


def solve(m: Matrix, b: Vector) -> Vector | None:
    """One exact solution of m x = b (free coordinates 0), or None."""
    if len(b) != m.nrows:
        raise ValueError("shape mismatch")
    augmented = Matrix(
        tuple(row + (b[i],) for i, row in enumerate(m.entries)), m.cols + 1
    )
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.entries[r][m.cols]
    return tuple(x)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.span(a.ambient_dim, a.basis + b.basis)


def span_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient constraints.

    x lies in both row spaces iff x = u A = w B for coefficient vectors
    (u, w); those pairs form the kernel of the n x (k+l) matrix whose
    columns are the rows of A and the negated rows of B.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ambient_dim)
    k = a.dim
    stacked = Matrix(
        tuple(
            tuple(a.basis[j][i] for j in range(k))
            + tuple(-b.basis[j][i] for j in range(b.dim))
            for i in range(a.ambient_dim)
        ),
        k + b.dim,
    )
    coeffs = kernel(stacked)
    vectors_ = []
    for w in coeffs.basis:
        x = zero_vector(a.ambient_dim)
        for j in range(k):
            x = vec_add(x, vec_scale(a.basis[j], w[j]))
        vectors_.append(x)
    return Subspace.span(a.ambient_dim, vectors_)


def complement_within(inner: Subspace, outer: Subspace) -> Subspace:
    """Deterministic complement of ``inner`` inside ``outer``.

    The basis rows of ``inner`` are rewritten in the coordinates of
    ``outer``'s canonical basis; the coordinate directions not used as
    pivots there are returned.  This pivot-extension rule is canonical:
    dim(inner) + dim(result) = dim(outer) and inner + result = outer.
    """
    if inner.ambient_dim != outer.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    coords = []
    for row in inner.basis:
        c = outer.coordinates(row)
        if c is None:
            raise ValueError("inner subspace is not contained in the outer one")
        coords.append(c)
    if not coords:
        return outer
    _, pivots = rref(Matrix(tuple(coords), outer.dim))
    pivot_set = set(pivots)
    missing = [outer.basis[j] for j in range(outer.dim) if j not in pivot_set]
    return Subspace.span(outer.ambient_dim, missing)


def charpoly(m: Matrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial det(xI - m), leading coefficient first.

    Faddeev-LeVerrier recursion; exact over Q (characteristic zero).
    """
    if m.nrows != m.cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    coeffs = [Fraction(1)]
    aux = Matrix.identity(n)
    for k in range(1, n + 1):
        prod = m.mul(aux)
        c = -prod.trace() / k
        coeffs.append(c)
        aux = prod.add(Matrix.identity(n).scale(c))
    return tuple(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def _rational_roots(int_coeffs: list[int]) -> set[Fraction]:
    """All rational roots of an integer polynomial (leading coeff first)."""
    coeffs = list(int_coeffs)
    roots: set[Fraction] = set()
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        roots.add(Fraction(0))
    if len(coeffs) <= 1:
        return roots
    candidates: set[Fraction] = set()
    for p in _divisors(coeffs[-1]):
        for q in _divisors(coeffs[0]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for cand in candidates:
        acc = Fraction(0)
        for c in coeffs:
            acc = acc * cand + c
        if acc == 0:
            roots.add(cand)
    return roots


def rational_eigen(m: Matrix) -> list[tuple[Fraction, Subspace]]:
    """Rational eigenvalues with their eigenspaces, sorted by eigenvalue.

    Eigenvalues come from the rational-root theorem applied to the
    integer-scaled characteristic polynomial (divisor enumeration of the
    trailing and leading coefficients).  Succeeds exactly when the
    eigenspace dimensions add up to the full dimension, i.e. when ``m``
    is diagonalizable over Q; otherwise raises NotSplitError.
    """
    if m.nrows != m.cols:
        raise ValueError("eigendecomposition of a non-square matrix")
    n = m.nrows
    coeffs = charpoly(m)
    scale = lcm(*(c.denominator for c in coeffs))
    int_coeffs = [int(c * scale) for c in coeffs]
    pairs = []
    total = 0
    for lam in sorted(_rational_roots(int_coeffs)):
        space = kernel(m.sub(Matrix.identity(n).scale(lam)))
        pairs.append((lam, space))
        total += space.dim
    if total != n:
        raise NotSplitError(
            f"matrix is not diagonalizable over Q: rational eigenspaces cover "
            f"{total} of {n} dimensions"
        )
    return pairs
