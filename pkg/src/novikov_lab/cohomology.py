"""Cocycles, coboundaries and second cohomology with scalar coefficients.

A bilinear form is an n x n :class:`Matrix` with ``Theta[i][j] = theta(e_i, e_j)``.
Spaces of forms live in Q^(n*n) using the row-major flattening ``i*n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import Algebra
from .errors import DimensionMismatch, NotACocycle
from .linalg import Matrix, Subspace, Vector, coordinates, nullspace, quotient_representatives

BilinearForm = Matrix


def delta(i: int, j: int, n: int) -> BilinearForm:
    """The elementary form with value 1 on (e_{i+1}, e_{j+1}) (0-based i, j)."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[i][j] = Fraction(1)
    return Matrix.from_rows(rows, n)


def flatten_form(theta: BilinearForm) -> Vector:
    return theta.flatten()


def unflatten_form(v: Sequence[Fraction], n: int) -> BilinearForm:
    if len(v) != n * n:
        raise DimensionMismatch(f"vector of length {len(v)} is not an {n}x{n} form")
    return Matrix.from_rows([v[i * n : (i + 1) * n] for i in range(n)], n)


def form_combination(coeffs: Sequence, forms: Sequence[BilinearForm], n: int) -> BilinearForm:
    out = Matrix.zeros(n, n)
    for c, f in zip(coeffs, forms):
        if c:
            out = out + f.scaled(c)
    return out


def _check_size(a: Algebra, theta: BilinearForm) -> None:
    if theta.rows != a.dim or theta.cols != a.dim:
        raise DimensionMismatch(f"{theta.rows}x{theta.cols} form on a {a.dim}-dimensional algebra")


def _condition_rows(a: Algebra) -> list[tuple[str, tuple[int, int, int], list[Fraction]]]:
    """Linear functionals on flattened forms, one per condition and basis triple.

    right-commutative: theta(xy, z) - theta(xz, y)
    left-symmetric:    theta(xy, z) - theta(x, yz) - theta(yx, z) + theta(y, xz)
    """
    n = a.dim
    P = a.structure
    rows = []
    for x, y, z in product(range(n), repeat=3):
        rc = [Fraction(0)] * (n * n)
        ls = [Fraction(0)] * (n * n)
        for k in range(n):
            rc[k * n + z] += P[x][y][k]
            rc[k * n + y] -= P[x][z][k]
            ls[k * n + z] += P[x][y][k] - P[y][x][k]
            ls[x * n + k] -= P[y][z][k]
            ls[y * n + k] += P[x][z][k]
        rows.append(("right-commutative", (x + 1, y + 1, z + 1), rc))
        rows.append(("left-symmetric", (x + 1, y + 1, z + 1), ls))
    return rows


def cocycle_space(a: Algebra) -> Subspace:
    n = a.dim
    rows = [r for _, _, r in _condition_rows(a) if any(r)]
    if not rows:
        return Subspace.full(n * n)
    return nullspace(Matrix.from_rows(rows, n * n))


def coboundary_space(a: Algebra) -> Subspace:
    """Span of the forms (x, y) -> f(xy), one per coordinate functional f = e_k^*."""
    n = a.dim
    return Subspace.span(
        [tuple(a.structure[i][j][k] for i in range(n) for j in range(n)) for k in range(n)], n * n
    )


def cocycle_violation(a: Algebra, theta: BilinearForm) -> tuple[str, tuple[int, int, int]] | None:
    """First (condition, 1-based triple) where ``theta`` fails, or None for a cocycle."""
    _check_size(a, theta)
    flat = theta.flatten()
    for name, triple, row in _condition_rows(a):
        if sum((c * t for c, t in zip(row, flat) if c), Fraction(0)):
            return name, triple
    return None


def is_cocycle(a: Algebra, theta: BilinearForm) -> bool:
    return cocycle_violation(a, theta) is None


def check_cocycle(a: Algebra, theta: BilinearForm, index: int | None = None) -> None:
    bad = cocycle_violation(a, theta)
    if bad is not None:
        raise NotACocycle(bad[0], bad[1], index)


@dataclass(frozen=True)
class CohomologyData:
    """Z^2, B^2 and a basis of representatives for H^2 = Z^2 / B^2.

    ``reduction`` is the list of vectors (b2 basis followed by representatives)
    in which any cocycle has unique coordinates; the trailing coordinates
    are its class in the representative basis.
    """

    dim: int
    z2: Subspace
    b2: Subspace
    h2_reps: tuple[BilinearForm, ...]
    reduction: tuple[Vector, ...]
    algebra: Algebra | None = field(default=None, compare=False, repr=False)

    @property
    def h2_dim(self) -> int:
        return len(self.h2_reps)


def cohomology(a: Algebra, representatives: Sequence[BilinearForm] | None = None) -> CohomologyData:
    """Compute Z^2, B^2 and H^2 representatives.

    ``representatives`` may name preferred cocycles for the H^2 basis; they
    must be cocycles whose classes form a basis of H^2, otherwise ValueError.
    """
    n = a.dim
    z2 = cocycle_space(a)
    b2 = coboundary_space(a)
    if not b2.is_subspace_of(z2):
        raise AssertionError("coboundaries are not cocycles; the algebra is not Novikov")
    if representatives is None:
        reps = [unflatten_form(v, n) for v in quotient_representatives(b2, z2)]
    else:
        reps = list(representatives)
        for idx, r in enumerate(reps):
            check_cocycle(a, r, idx + 1)
        span = Subspace(n * n, b2.basis + tuple(r.flatten() for r in reps))
        if len(reps) != z2.dim - b2.dim or span.dim != z2.dim:
            raise ValueError("representatives do not form a basis of the second cohomology")
    reduction = b2.basis + tuple(r.flatten() for r in reps)
    return CohomologyData(n, z2, b2, tuple(reps), reduction, a)


def reduce_class(data: CohomologyData, theta: BilinearForm) -> Vector:
    """Coordinates of [theta] in the basis of ``data.h2_reps``.

    Raises NotACocycle, naming the failing condition and triple, if theta
    lies outside Z^2.
    """
    flat = theta.flatten()
    if theta.rows != data.dim or theta.cols != data.dim:
        raise DimensionMismatch(f"{theta.rows}x{theta.cols} form, expected {data.dim}x{data.dim}")
    if not data.z2.contains(flat):
        check_cocycle(data.algebra, theta)
    c = coordinates(list(data.reduction), flat)
    return c[data.b2.dim :]


def class_subspace(data: CohomologyData, forms: Sequence[BilinearForm]) -> Subspace:
    """Span of the classes of ``forms`` inside H^2, in representative coordinates."""
    return Subspace.span([reduce_class(data, f) for f in forms], data.h2_dim)


def classes_independent(data: CohomologyData, forms: Sequence[BilinearForm]) -> bool:
    return class_subspace(data, forms).dim == len(forms)


def cocycle_annihilator(a: Algebra, theta: BilinearForm) -> Subspace:
    """{x : theta(x, A) = 0 and theta(A, x) = 0}."""
    _check_size(a, theta)
    n = a.dim
    if n == 0:
        return Subspace.zero(0)
    stacked = theta.entries + theta.transpose().entries
    return nullspace(Matrix(2 * n, n, stacked))
