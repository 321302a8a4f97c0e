"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator). Matrices are immutable row-major grids and
subspaces keep their basis in reduced row echelon form, so two spans are
equal exactly when their stored bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DimensionMismatch, NotContained

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def combine(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    """Return ``sum(c * v)`` over paired coefficients and vectors of length n."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> Matrix:
        grid = tuple(to_vector(r) for r in rows)
        if cols is None:
            if not grid:
                raise DimensionMismatch("column count is required for a matrix without rows")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        return cls.from_rows(
            ((columns[j][i] for j in range(len(columns))) for i in range(rows)), len(columns)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def flatten(self) -> Vector:
        return tuple(a for r in self.entries for a in r)

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, self.columns())

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        return tuple(dot(r, v) for r in self.entries)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.columns()
        return Matrix(self.rows, other.cols, tuple(tuple(dot(r, c) for c in cols) for r in self.entries))

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return self.scaled(-ONE)

    def scaled(self, c) -> Matrix:
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(scale(c, r) for r in self.entries))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.entries)

    def rank(self) -> int:
        return rref(self)[2]

    def inverse(self) -> Matrix | None:
        """Inverse by Gauss-Jordan elimination, or None when singular."""
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices have inverses")
        n = self.rows
        aug = Matrix(n, 2 * n, tuple(r + unit_vector(n, i) for i, r in enumerate(self.entries)))
        red, pivots, _ = rref(aug)
        if pivots[:n] != list(range(n)):
            return None
        return Matrix(n, n, tuple(r[n:] for r in red.entries))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def _same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank.

    Pivots are the first nonzero entry scanning left to right; exact
    arithmetic needs no pivoting strategy.
    """
    grid = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if grid[i][c] != 0), None)
        if p is None:
            continue
        grid[r], grid[p] = grid[p], grid[r]
        lead = grid[r][c]
        if lead != 1:
            grid[r] = [a / lead for a in grid[r]]
        pivot_row = grid[r]
        for i in range(m.rows):
            f = grid[i][c]
            if i != r and f != 0:
                row = grid[i]
                for k in range(c, m.cols):
                    if pivot_row[k]:
                        row[k] -= f * pivot_row[k]
        pivots.append(c)
        r += 1
    return Matrix(m.rows, m.cols, tuple(tuple(row) for row in grid)), pivots, len(pivots)


def _canonical_basis(vectors: Iterable[Sequence[Fraction]], n: int) -> tuple[Vector, ...]:
    rows = [to_vector(v) for v in vectors]
    for v in rows:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
    if not rows:
        return ()
    red, _, rank = rref(Matrix(len(rows), n, tuple(rows)))
    return red.entries[:rank]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim with canonical RREF basis."""

    ambient_dim: int
    basis: tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "basis", _canonical_basis(self.basis, self.ambient_dim))

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        return cls(ambient_dim, tuple(to_vector(v) for v in vectors))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.dim, self.ambient_dim, self.basis)

    def contains(self, v: Sequence) -> bool:
        v = to_vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return Subspace(self.ambient_dim, self.basis + (v,)).dim == self.dim

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return (self + other).dim == other.dim

    def __add__(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def equations(self) -> tuple[Vector, ...]:
        """Basis of linear functionals vanishing exactly on this subspace."""
        if not self.basis:
            return Subspace.full(self.ambient_dim).basis
        return nullspace(self.basis_matrix()).basis

    def intersection(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        eqs = self.equations() + other.equations()
        if not eqs:
            return Subspace.full(self.ambient_dim)
        return nullspace(Matrix(len(eqs), self.ambient_dim, eqs))

    def __and__(self, other: Subspace) -> Subspace:
        return self.intersection(other)

    def image(self, m: Matrix) -> Subspace:
        return Subspace(m.rows, tuple(m.apply(v) for v in self.basis))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")


def nullspace(m: Matrix) -> Subspace:
    """The subspace {v : m v = 0}, of dimension cols - rank."""
    red, pivots, _ = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for row, p in zip(red.entries, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return Subspace(m.cols, tuple(basis))


def quotient_representatives(sub: Subspace, full: Subspace) -> list[Vector]:
    """Vectors of ``full`` that complete a basis of ``sub`` to one of ``full``.

    Candidates are taken from the canonical basis of ``full`` in order.
    """
    if not sub.is_subspace_of(full):
        raise NotContained("subspace is not contained in the ambient space")
    reps: list[Vector] = []
    current = sub
    for v in full.basis:
        if current.dim == full.dim:
            break
        grown = Subspace(current.ambient_dim, current.basis + (v,))
        if grown.dim > current.dim:
            reps.append(v)
            current = grown
    return reps


def subspaces_equal(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a.basis == b.basis


def solve(m: Matrix, rhs: Sequence) -> Vector | None:
    """Some solution x of m x = rhs (free variables set to zero), or None."""
    rhs = to_vector(rhs)
    if len(rhs) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(rhs)} for {m.rows} rows")
    aug = Matrix(m.rows, m.cols + 1, tuple(r + (b,) for r, b in zip(m.entries, rhs)))
    red, pivots, _ = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, p in zip(red.entries, pivots):
        x[p] = row[m.cols]
    return tuple(x)


def coordinates(vectors: Sequence[Sequence], v: Sequence) -> Vector | None:
    """Coefficients c with sum(c_i * vectors[i]) = v, or None if v is outside the span.

    Unique whenever ``vectors`` are linearly independent.
    """
    v = to_vector(v)
    if not vectors:
        return () if is_zero(v) else None
    return solve(Matrix.from_columns(vectors, len(v)), v)


def rank_of(vectors: Sequence[Sequence], n: int) -> int:
    return Subspace.span(vectors, n).dim
