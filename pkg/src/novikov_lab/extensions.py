"""Central extensions by scalar cocycles and the annihilator criteria around them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, annihilator
from .cohomology import BilinearForm, CohomologyData, check_cocycle, cocycle_annihilator, reduce_class
from .errors import DimensionMismatch
from .linalg import Matrix, Subspace, quotient_representatives, unit_vector


@dataclass(frozen=True)
class ExtensionSpec:
    base: Algebra
    cocycles: tuple[BilinearForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "cocycles", tuple(self.cocycles))
        if not self.cocycles:
            raise ValueError("an extension needs at least one cocycle")
        n = self.base.dim
        for t in self.cocycles:
            if t.rows != n or t.cols != n:
                raise DimensionMismatch(f"{t.rows}x{t.cols} cocycle on a {n}-dimensional algebra")


def central_extension(spec: ExtensionSpec, check: bool = True) -> Algebra:
    """The algebra on A + V where e_i e_j gains sum_k theta_k(e_i, e_j) e_{n+k}.

    With ``check`` off, non-cocycles are accepted and the result may fail the
    Novikov identities.
    """
    base = spec.base
    n, s = base.dim, len(spec.cocycles)
    if check:
        for idx, t in enumerate(spec.cocycles):
            check_cocycle(base, t, idx + 1)
    zero = (Fraction(0),) * (n + s)
    grid = []
    for i in range(n + s):
        row = []
        for j in range(n + s):
            if i >= n or j >= n:
                row.append(zero)
            else:
                row.append(base.structure[i][j] + tuple(t[i, j] for t in spec.cocycles))
        grid.append(tuple(row))
    return Algebra(tuple(grid))


def extend(base: Algebra, cocycles: Sequence[BilinearForm], check: bool = True) -> Algebra:
    return central_extension(ExtensionSpec(base, tuple(cocycles)), check)


def has_annihilator_component(a: Algebra, data: CohomologyData, cocycles: Sequence[BilinearForm]) -> bool:
    """True iff the classes of the cocycles are linearly dependent in H^2."""
    for idx, t in enumerate(cocycles):
        check_cocycle(a, t, idx + 1)
    classes = [reduce_class(data, t) for t in cocycles]
    return Subspace.span(classes, data.h2_dim).dim < len(classes)


def common_annihilator(a: Algebra, cocycles: Sequence[BilinearForm]) -> Subspace:
    """The intersection of Ann(A) with every Ann(theta_i)."""
    out = annihilator(a)
    for t in cocycles:
        out = out & cocycle_annihilator(a, t)
    return out


def is_admissible(a: Algebra, cocycles: Sequence[BilinearForm]) -> bool:
    for idx, t in enumerate(cocycles):
        check_cocycle(a, t, idx + 1)
    return common_annihilator(a, cocycles).dim == 0


def quotient_by_annihilator(a: Algebra) -> Algebra:
    """A / Ann(A) realized on a complement spanned by standard basis vectors.

    The complement is the lexicographically first set of basis vectors that
    completes Ann(A). Products are projected along Ann(A).
    """
    n = a.dim
    ann = annihilator(a)
    comp = quotient_representatives(ann, Subspace.full(n))
    keep = [next(i for i, c in enumerate(v) if c) for v in comp]
    # Coordinates in the basis (complement vectors, ann basis); drop the ann part.
    basis = [unit_vector(n, i) for i in keep] + list(ann.basis)
    to_new = Matrix.from_columns(basis, n).inverse()
    m = len(keep)
    grid = tuple(tuple(to_new.apply(a.structure[i][j])[:m] for j in keep) for i in keep)
    return Algebra(grid)
