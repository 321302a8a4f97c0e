"""Isomorphism witnesses between one-generated nilpotent algebras.

A homomorphism out of an algebra generated by g is fixed by the image g'
of g: every basis element is a combination of products of g (its
generator words), so its image is the same combination of products of g'.
The search looks for g' in the target.

The target is written in a basis adapted to its power filtration
B = B^1 > B^2 > ... . Say a coordinate of g' has level l when its basis
vector spans part of B^l / B^(l+1). The defect
``phi(e_i) phi(e_j) - phi(e_i e_j)`` only involves products of at least two
factors, so its level-j part depends on coordinates of level below j and
is affine in those of level j - 1 once level 1 is fixed (for j >= 3).
The search therefore enumerates the single level-1 coordinate over a
rational grid, then solves each following level exactly and enumerates
only genuinely free directions over the grid. A nonzero level-1
coordinate means g' generates B, so any solution is bijective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from .algebra import FINGERPRINT_FIELDS, Algebra, evaluate_words, fingerprint, powers
from .errors import DimensionMismatch, MissingGeneratorWords
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add,
    combine,
    nullspace,
    quotient_representatives,
    scale,
    solve,
    sub,
    unit_vector,
    zero_vector,
)

DEFAULT_HEIGHT = 4
DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class IsoWitness:
    """``matrix`` sends a's basis to b's: column k is the image of e_{k+1}."""

    matrix: Matrix
    generator_image: Vector
    products_checked: int
    invertible: bool = True
    nodes: int = 0


@dataclass(frozen=True)
class NotIsomorphicCertificate:
    invariant: str
    left: object
    right: object


@dataclass(frozen=True)
class Unknown:
    nodes: int
    reason: str


def rational_grid(height: int = DEFAULT_HEIGHT) -> list[Fraction]:
    """All p/q with |p| <= height and 1 <= q <= height, ordered by height, size, then sign."""
    values = {Fraction(p, q) for q in range(1, height + 1) for p in range(-height, height + 1) if gcd(p, q) == 1}
    values.add(Fraction(0))
    return sorted(values, key=lambda v: (max(abs(v.numerator), v.denominator) if v else 0, abs(v), v < 0))


def distinguish(a: Algebra, b: Algebra) -> NotIsomorphicCertificate | None:
    """Name the first fingerprint component that differs, if any."""
    fa, fb = fingerprint(a), fingerprint(b)
    for name, x, y in zip(FINGERPRINT_FIELDS, fa, fb):
        if x != y:
            return NotIsomorphicCertificate(name, x, y)
    return None


def verify_isomorphism(a: Algebra, b: Algebra, m: Matrix) -> bool:
    """Independent check: m is invertible and m(e_i e_j) = (m e_i)(m e_j) in b."""
    n = a.dim
    if b.dim != n or m.rows != n or m.cols != n or not m.is_invertible():
        return False
    cols = m.columns()
    return all(m.apply(a.structure[i][j]) == b.multiply(cols[i], cols[j]) for i in range(n) for j in range(n))


class _Search:
    """Depth-first search over generator images, one filtration level at a time.

    A partial solution is an affine family ``point + sum t_s * directions[s]``
    of adapted coordinates. Each step adds the next level's coordinates as
    unknowns and imposes the next level of the defect. When that defect is
    affine in all unknowns it is solved exactly; otherwise the older free
    parameters that enter non-linearly are pinned on the grid one at a time.
    """

    def __init__(self, a: Algebra, b: Algebra, budget: int, grid: list[Fraction]):
        self.a, self.b, self.budget, self.grid = a, b, budget, grid
        self.nodes = 0
        self.levels: list[list[int]] = []
        self.basis: list[Vector] = []
        chain = powers(b)
        if chain[-1].dim:
            chain.append(Subspace.zero(b.dim))
        for upper, lower in zip(chain, chain[1:]):
            reps = quotient_representatives(lower, upper)
            start = len(self.basis)
            self.basis.extend(reps)
            self.levels.append(list(range(start, start + len(reps))))
        self.to_adapted = Matrix.from_columns(self.basis, b.dim).inverse()

    @property
    def exhausted(self) -> bool:
        return self.nodes >= self.budget

    def vector(self, coords: Sequence[Fraction]) -> Vector:
        return combine(coords, self.basis, self.b.dim)

    def images(self, coords: Sequence[Fraction]) -> list[Vector]:
        return evaluate_words(self.b, self.a.generator_words, self.vector(coords))

    def defect(self, coords: Sequence[Fraction], level: int) -> Vector:
        """Level-``level`` adapted coordinates of every product defect (0-based level)."""
        self.nodes += 1
        imgs = self.images(coords)
        n = self.a.dim
        idx = self.levels[level]
        out = []
        for i in range(n):
            for j in range(n):
                want = combine(self.a.structure[i][j], imgs, self.b.dim)
                d = self.to_adapted.apply(sub(self.b.multiply(imgs[i], imgs[j]), want))
                out.extend(d[t] for t in idx)
        return tuple(out)

    def candidates(self) -> Iterator[Vector]:
        if not self.levels or len(self.levels[0]) != 1:
            return
        size = len(self.basis)
        lead = self.levels[0][0]
        for x in self.grid:
            if not x or self.exhausted:
                continue
            point = [Fraction(0)] * size
            point[lead] = x
            if len(self.levels) > 1 and any(self.defect(point, 1)):
                continue
            yield from self._extend(tuple(point), [], 1)

    def _at(self, point: Vector, directions: list[Vector], t: Sequence[Fraction]) -> Vector:
        return add(point, combine(t, directions, len(point))) if directions else point

    def _extend(self, point: Vector, directions: list[Vector], level: int) -> Iterator[Vector]:
        """Impose the defect at ``level + 1`` on coordinates up to ``level``."""
        if self.exhausted:
            return
        if level + 1 >= len(self.levels):
            yield from self._finish(point, directions)
            return
        size = len(point)
        unknowns = directions + [unit_vector(size, t) for t in self.levels[level]]
        target = level + 1

        def value(u: Sequence[Fraction]) -> Vector:
            return self.defect(self._at(point, unknowns, u), target)

        k = len(unknowns)
        zero = value([Fraction(0)] * k)
        units = [unit_vector(k, s) for s in range(k)]
        columns = [sub(value(e), zero) for e in units]
        nonlinear = [
            s
            for s in range(len(directions))
            if any(
                value(add(units[s], units[r])) != add(add(columns[s], columns[r]), zero) for r in range(s, k)
            )
        ]
        if nonlinear:
            # Pin one parameter that enters non-linearly on the grid and retry.
            s = nonlinear[0]
            rest = directions[:s] + directions[s + 1 :]
            for t in self.grid:
                if self.exhausted:
                    return
                pinned = add(point, scale(t, directions[s]))
                yield from self._extend(pinned, rest, level)
            return
        m = Matrix.from_columns(columns, len(zero))
        particular = solve(m, tuple(-c for c in zero))
        if particular is None:
            return
        new_point = self._at(point, unknowns, particular)
        new_directions = [self._at(zero_vector(size), unknowns, f) for f in nullspace(m).basis]
        if any(self.defect(new_point, target)):
            return
        yield from self._extend(new_point, new_directions, level + 1)

    def _finish(self, point: Vector, directions: list[Vector]) -> Iterator[Vector]:
        for t in product(self.grid, repeat=len(directions)):
            if self.exhausted:
                return
            self.nodes += 1
            yield self._at(point, directions, t)


def find_isomorphism(
    a: Algebra, b: Algebra, search_budget: int = DEFAULT_BUDGET, height: int = DEFAULT_HEIGHT
) -> IsoWitness | NotIsomorphicCertificate | Unknown:
    """Search for an isomorphism a -> b driven by a's generator words.

    Returns a verified witness, a certificate when an invariant differs, or
    Unknown when the bounded search ends without a witness. ``search_budget``
    caps the number of defect evaluations.
    """
    if a.generator_words is None:
        raise MissingGeneratorWords("the source algebra has no generator words")
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim} differ")
    cert = distinguish(a, b)
    if cert is not None:
        return cert
    search = _Search(a, b, search_budget, rational_grid(height))
    for coords in search.candidates():
        m = Matrix.from_columns(search.images(coords), a.dim)
        if verify_isomorphism(a, b, m):
            return IsoWitness(m, search.vector(coords), a.dim * a.dim, True, search.nodes)
    if search.nodes >= search_budget:
        return Unknown(search.nodes, "search budget exhausted")
    return Unknown(search.nodes, "no witness on the rational grid")
