"""Exact rational linear algebra over `fractions.Fraction`.

Everything downstream (cocycles, coboundaries, cohomology coordinates) sits
on the four primitives here: reduced row echelon form, kernels, pivot-solve,
and quotient-space coordinates.  All arithmetic is exact; equality means
equality of normalized rationals, never a tolerance.

Values are immutable after construction and all operations are pure, so they
are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]


def vector(values: Iterable) -> Vector:
    """Coerce an iterable of ints / strings / Fractions to an exact vector."""
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols grid of exact rationals, stored row-major.

    `rows` and `cols` are kept explicitly so zero-row and zero-column
    matrices (which show up as differentials into or out of empty degrees)
    stay well-formed.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("entry grid does not match declared row count")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("entry grid does not match declared column count")

    @staticmethod
    def from_rows(rows: Sequence[Iterable], cols: Optional[int] = None) -> "Matrix":
        grid = tuple(vector(r) for r in rows)
        if cols is None:
            if not grid:
                raise ValueError("column count is required for a matrix with no rows")
            cols = len(grid[0])
        return Matrix(len(grid), cols, grid)

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return Matrix(rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)))

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def mul_vector(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"expected a vector of length {self.cols}, got {len(v)}")
        w = vector(v)
        return tuple(sum((a * b for a, b in zip(row, w)), Fraction(0)) for row in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        cols = [other.column(j) for j in range(other.cols)]
        grid = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
            for row in self.entries
        )
        return Matrix(self.rows, other.cols, grid)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns.

    Gauss-Jordan over Fraction: pivots normalized to 1, pivot columns cleared
    above and below.  The result is the unique RREF of `m`.
    """
    grid = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if grid[i][c] != 0), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        pv = grid[r][c]
        if pv != 1:
            grid[r] = [x / pv for x in grid[r]]
        for i in range(m.rows):
            if i != r and grid[i][c] != 0:
                f = grid[i][c]
                grid[i] = [a - f * b for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(grid, cols=m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve(m: Matrix, rhs: Sequence) -> Optional[Vector]:
    """Pivot-solve m*x = rhs: the particular solution with free variables zero.

    Returns None when the system is inconsistent.  The choice of solution is
    deterministic, which keeps primitives and hence orientation computations
    reproducible across runs.
    """
    b = vector(rhs)
    if len(b) != m.rows:
        raise ValueError(f"expected a right-hand side of length {m.rows}, got {len(b)}")
    aug = Matrix.from_rows(
        [tuple(row) + (b[i],) for i, row in enumerate(m.entries)], cols=m.cols + 1
    )
    reduced, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced.entries[i][m.cols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace carried by an RREF basis, one basis vector per row."""

    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    @staticmethod
    def spanned_by(ambient_dim: int, vectors: Sequence[Iterable]) -> "Subspace":
        """Span of arbitrary vectors, normalized to the canonical RREF basis."""
        rows = [vector(v) for v in vectors]
        for rw in rows:
            if len(rw) != ambient_dim:
                raise ValueError("spanning vector has the wrong length")
        if not rows:
            return Subspace(ambient_dim, Matrix.zero(0, ambient_dim), ())
        reduced, pivots = rref(Matrix.from_rows(rows, cols=ambient_dim))
        basis = Matrix.from_rows(reduced.entries[: len(pivots)], cols=ambient_dim)
        return Subspace(ambient_dim, basis, pivots)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.zero(0, ambient_dim), ())

    @property
    def dim(self) -> int:
        return self.basis.rows

    def reduce(self, v: Sequence) -> Vector:
        """Subtract the unique combination of basis rows matching v's pivot
        coordinates.  The result is supported on non-pivot columns and is zero
        exactly when v lies in the subspace."""
        w = list(vector(v))
        if len(w) != self.ambient_dim:
            raise ValueError("vector has the wrong length for this subspace")
        for i, p in enumerate(self.pivots):
            f = w[p]
            if f != 0:
                row = self.basis.entries[i]
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def is_subspace_of(self, other: "Subspace") -> bool:
        return self.ambient_dim == other.ambient_dim and all(
            other.contains(row) for row in self.basis.entries
        )


def kernel(m: Matrix) -> Subspace:
    """The exact null space {v : m*v = 0} as a Subspace of dimension
    cols - rank(m)."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i][f]
        vectors.append(v)
    return Subspace.spanned_by(m.cols, vectors)


@dataclass(frozen=True)
class QuotientSpace:
    """Ambient space modulo a subspace, with canonical coset representatives.

    The representatives are the standard basis vectors at the non-pivot
    columns of the subspace basis, so coordinates in the quotient are
    deterministic for a fixed ambient basis.
    """

    ambient_dim: int
    subspace: Subspace
    complement_basis: Matrix
    free_columns: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.free_columns)


def quotient(ambient_dim: int, sub: Subspace) -> QuotientSpace:
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace does not live in the requested ambient space")
    free = tuple(c for c in range(ambient_dim) if c not in sub.pivots)
    rows = []
    for f in free:
        row = [Fraction(0)] * ambient_dim
        row[f] = Fraction(1)
        rows.append(row)
    return QuotientSpace(ambient_dim, sub, Matrix.from_rows(rows, cols=ambient_dim), free)


def project(q: QuotientSpace, v: Sequence) -> Vector:
    """Coordinates of v + subspace in the canonical complement basis.

    Linear, and identically zero on the subspace: reducing v against the RREF
    basis leaves a vector supported on the free columns, whose entries are the
    unique coefficients c with v - sum(c_i * complement_i) in the subspace.
    """
    reduced = q.subspace.reduce(v)
    return tuple(reduced[f] for f in q.free_columns)
