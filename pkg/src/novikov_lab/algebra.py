"""Finite-dimensional algebras given by structure constants.

``structure[i][j]`` is the coordinate vector of ``e_i * e_j``. Indices are
0-based in the API; user-facing labels and identity-violation triples use
the 1-based names ``e1, e2, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence, Union

from .errors import DimensionMismatch, NotNilpotent
from .linalg import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    Vector,
    coordinates,
    is_zero,
    nullspace,
    sub,
    to_vector,
    unit_vector,
    zero_vector,
)

# A word is the generator "g" or a pair (left, right) meaning left * right.
Word = Union[str, tuple]
GEN = "g"


@dataclass(frozen=True)
class GeneratorWords:
    """Each basis element as a linear combination of products of one generator.

    ``expressions[k]`` is a tuple of ``(coefficient, word)`` pairs whose
    value, with ``generator`` substituted for ``g``, is ``e_{k+1}``.
    """

    generator: Vector
    expressions: tuple[tuple[tuple[Fraction, Word], ...], ...]


@dataclass(frozen=True)
class IdentityViolation:
    identity: str  # "right-commutative" or "left-symmetric"
    triple: tuple[int, int, int]  # 1-based basis indices (x, y, z)
    residual: Vector


@dataclass(frozen=True)
class Algebra:
    structure: tuple[tuple[Vector, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)
    generator_words: GeneratorWords | None = field(default=None, compare=False)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.structure)
        grid = tuple(tuple(to_vector(v) for v in row) for row in self.structure)
        if any(len(row) != n or any(len(v) != n for v in row) for row in grid):
            raise DimensionMismatch(f"structure tensor is not {n}x{n}x{n}")
        object.__setattr__(self, "structure", grid)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(n)))

    @classmethod
    def from_products(
        cls, dim: int, products: Mapping[tuple[int, int], Mapping[int, object]], **kwargs
    ) -> Algebra:
        """Build from ``{(i, j): {k: c}}`` with 0-based indices; missing products are zero."""
        grid = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in products.items():
            for k, c in terms.items():
                grid[i][j][k] += Fraction(c)
        return cls(tuple(tuple(tuple(v) for v in row) for row in grid), **kwargs)

    @classmethod
    def zero(cls, dim: int) -> Algebra:
        return cls.from_products(dim, {})

    @property
    def dim(self) -> int:
        return len(self.structure)

    @cached_property
    def _sparse(self) -> tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]:
        return tuple(
            tuple(tuple((k, c) for k, c in enumerate(v) if c) for v in row) for row in self.structure
        )

    def product(self, i: int, j: int) -> Vector:
        return self.structure[i][j]

    def multiply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise DimensionMismatch(f"vectors of length {len(u)}, {len(v)} in a {n}-dimensional algebra")
        out = [ZERO] * n
        sparse = self._sparse
        for i, a in enumerate(u):
            if not a:
                continue
            row = sparse[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def left_matrix(self, u: Sequence[Fraction]) -> Matrix:
        """Matrix of y -> u * y (columns are images of basis vectors)."""
        return Matrix.from_columns([self.multiply(u, unit_vector(self.dim, j)) for j in range(self.dim)], self.dim)

    def right_matrix(self, u: Sequence[Fraction]) -> Matrix:
        """Matrix of y -> y * u."""
        return Matrix.from_columns([self.multiply(unit_vector(self.dim, j), u) for j in range(self.dim)], self.dim)

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.structure[i][j] == self.structure[j][i] for i in range(n) for j in range(i + 1, n))

    def with_words(self, words: GeneratorWords | None) -> Algebra:
        return Algebra(self.structure, self.labels, words, self.name)

    def renamed(self, name: str | None) -> Algebra:
        return Algebra(self.structure, self.labels, self.generator_words, name)

    def __repr__(self) -> str:
        return f"Algebra(name={self.name!r}, dim={self.dim})"


def multiply(a: Algebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return a.multiply(u, v)


def basis_product(a: Algebra, i: int, j: int) -> Vector:
    return a.structure[i][j]


def check_novikov(a: Algebra) -> list[IdentityViolation]:
    """All basis triples where right-commutativity or left-symmetry fails.

    Both identities are trilinear, so basis triples suffice.
    """
    n = a.dim
    E = [unit_vector(n, i) for i in range(n)]
    P = a.structure
    violations = []
    for i, j, k in product(range(n), repeat=3):
        xy_z = a.multiply(P[i][j], E[k])
        xz_y = a.multiply(P[i][k], E[j])
        r = sub(xy_z, xz_y)
        if not is_zero(r):
            violations.append(IdentityViolation("right-commutative", (i + 1, j + 1, k + 1), r))
        x_yz = a.multiply(E[i], P[j][k])
        yx_z = a.multiply(P[j][i], E[k])
        y_xz = a.multiply(E[j], P[i][k])
        r = tuple(p - q - s + t for p, q, s, t in zip(xy_z, x_yz, yx_z, y_xz))
        if not is_zero(r):
            violations.append(IdentityViolation("left-symmetric", (i + 1, j + 1, k + 1), r))
    return violations


def is_novikov(a: Algebra) -> bool:
    return not check_novikov(a)


def subspace_product(a: Algebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of all products x * y with x in u and y in v."""
    return Subspace.span([a.multiply(x, y) for x in u.basis for y in v.basis], a.dim)


def powers(a: Algebra) -> list[Subspace]:
    """[A^1, A^2, ...] with A^k the sum of A^i A^j over i + j = k.

    Stops at the first zero power or when the chain stabilizes.
    """
    chain = [Subspace.full(a.dim)]
    while chain[-1].dim > 0:
        k = len(chain) + 1
        total = Subspace.zero(a.dim)
        for i in range(1, k):
            total = total + subspace_product(a, chain[i - 1], chain[k - i - 1])
        if total == chain[-1]:
            break
        chain.append(total)
    return chain


def power_chain(a: Algebra) -> list[int]:
    return [p.dim for p in powers(a)]


def is_nilpotent(a: Algebra) -> bool:
    return power_chain(a)[-1] == 0


def annihilator(a: Algebra) -> Subspace:
    """{x : x A + A x = 0}, the nullspace of the stacked left and right multiplications."""
    n = a.dim
    if n == 0:
        return Subspace.zero(0)
    rows = []
    for j in range(n):
        rows.extend(a.right_matrix(unit_vector(n, j)).entries)  # x -> x * e_j
        rows.extend(a.left_matrix(unit_vector(n, j)).entries)  # x -> e_j * x
    return nullspace(Matrix(len(rows), n, tuple(rows)))


def left_annihilator(a: Algebra) -> Subspace:
    """{x : x A = 0}."""
    n = a.dim
    if n == 0:
        return Subspace.zero(0)
    rows = [r for j in range(n) for r in a.right_matrix(unit_vector(n, j)).entries]
    return nullspace(Matrix(len(rows), n, tuple(rows)))


def right_annihilator(a: Algebra) -> Subspace:
    """{x : A x = 0}."""
    n = a.dim
    if n == 0:
        return Subspace.zero(0)
    rows = [r for j in range(n) for r in a.left_matrix(unit_vector(n, j)).entries]
    return nullspace(Matrix(len(rows), n, tuple(rows)))


def generated_subalgebra(a: Algebra, vectors: Sequence[Sequence[Fraction]]) -> Subspace:
    """Smallest subspace containing ``vectors`` and closed under multiplication."""
    span = Subspace.span(vectors, a.dim)
    while True:
        grown = span + subspace_product(a, span, span)
        if grown == span:
            return span
        span = grown


def derive_generator_words(a: Algebra, generator: Sequence[Fraction]) -> GeneratorWords | None:
    """Express every basis element through products of ``generator``.

    Words are grown breadth-first by length; a word is kept when its value
    is independent of the values kept so far. Returns None if the
    generator does not generate the whole algebra.
    """
    n = a.dim
    g = to_vector(generator)
    kept: list[tuple[Word, Vector]] = []
    span = Subspace.zero(n)
    by_length: dict[int, list[tuple[Word, Vector]]] = {}
    if not is_zero(g):
        kept.append((GEN, g))
        span = Subspace.span([g], n)
        by_length[1] = [(GEN, g)]
    length = 1
    while span.dim < n and by_length.get(length):
        length += 1
        fresh = []
        for i in range(1, length):
            for lw, lv in by_length.get(i, []):
                for rw, rv in by_length.get(length - i, []):
                    v = a.multiply(lv, rv)
                    if not span.contains(v):
                        span = span + Subspace.span([v], n)
                        fresh.append(((lw, rw), v))
                        kept.append(((lw, rw), v))
        by_length[length] = fresh
    if span.dim < n:
        return None
    values = [v for _, v in kept]
    expressions = []
    for k in range(n):
        c = coordinates(values, unit_vector(n, k))
        expressions.append(tuple((ci, w) for ci, (w, _) in zip(c, kept) if ci))
    return GeneratorWords(g, tuple(expressions))


def evaluate_word(a: Algebra, word: Word, g: Sequence[Fraction], cache: dict | None = None) -> Vector:
    if cache is None:
        cache = {}
    if word == GEN:
        return tuple(g)
    if word in cache:
        return cache[word]
    left, right = word
    value = a.multiply(evaluate_word(a, left, g, cache), evaluate_word(a, right, g, cache))
    cache[word] = value
    return value


def evaluate_words(a: Algebra, words: GeneratorWords, g: Sequence[Fraction]) -> list[Vector]:
    """Images of the basis elements of the algebra owning ``words`` when g is sent into ``a``."""
    cache: dict = {}
    images = []
    for expr in words.expressions:
        out = [ZERO] * a.dim
        for c, w in expr:
            for k, x in enumerate(evaluate_word(a, w, g, cache)):
                if x:
                    out[k] += c * x
        images.append(tuple(out))
    return images


def is_one_generated(a: Algebra) -> tuple[bool, Vector | None]:
    """Whether a nilpotent algebra is generated by one element, with a witness.

    Uses dim(A/A^2) = 1 and then checks that the witness really generates A.
    """
    chain = powers(a)
    if chain[-1].dim != 0:
        raise NotNilpotent(f"power chain {[p.dim for p in chain]} does not reach 0")
    n = a.dim
    if n == 0:
        return False, None
    square = chain[1] if len(chain) > 1 else Subspace.zero(n)
    if n - square.dim != 1:
        return False, None
    witness = next(unit_vector(n, i) for i in range(n) if not square.contains(unit_vector(n, i)))
    if generated_subalgebra(a, [witness]).dim != n:
        return False, None
    return True, witness


def ensure_generator_words(a: Algebra) -> Algebra:
    """Attach derived generator words when missing (requires a one-generated nilpotent algebra)."""
    if a.generator_words is not None:
        return a
    ok, witness = is_one_generated(a)
    if not ok:
        return a
    return a.with_words(derive_generator_words(a, witness))


FINGERPRINT_FIELDS = (
    "dim",
    "power_chain",
    "annihilator_dim",
    "left_annihilator_dim",
    "right_annihilator_dim",
    "dim_A_A2",
    "dim_A2_A",
    "commutative",
)


def fingerprint(a: Algebra) -> tuple:
    """Isomorphism invariants, in the order of FINGERPRINT_FIELDS."""
    chain = powers(a)
    full = chain[0]
    square = chain[1] if len(chain) > 1 else Subspace.zero(a.dim)
    return (
        a.dim,
        tuple(p.dim for p in chain),
        annihilator(a).dim,
        left_annihilator(a).dim,
        right_annihilator(a).dim,
        subspace_product(a, full, square).dim,
        subspace_product(a, square, full).dim,
        a.is_commutative(),
    )


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    n, m = a.dim, b.dim
    products = {}
    for i in range(n):
        for j in range(n):
            products[(i, j)] = {k: c for k, c in enumerate(a.structure[i][j]) if c}
    for i in range(m):
        for j in range(m):
            products[(n + i, n + j)] = {n + k: c for k, c in enumerate(b.structure[i][j]) if c}
    return Algebra.from_products(n + m, products)


def change_basis(a: Algebra, m: Matrix) -> Algebra:
    """The algebra in the basis given by the columns of invertible ``m``."""
    inv = m.inverse()
    if inv is None:
        raise ValueError("change of basis matrix is singular")
    cols = m.columns()
    n = a.dim
    grid = tuple(
        tuple(inv.apply(a.multiply(cols[i], cols[j])) for j in range(n)) for i in range(n)
    )
    return Algebra(grid)
