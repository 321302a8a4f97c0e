"""Automorphism matrices, their action on cocycles, and checks of action formulas.

Matrices act on column vectors: column j of ``m`` is the image of e_{j+1}.
A form transforms as ``(phi theta)(x, y) = theta(phi x, phi y)``, i.e.
``m^T Theta m``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Algebra
from .cohomology import BilinearForm, CohomologyData, cohomology, form_combination, reduce_class, unflatten_form
from .errors import DimensionMismatch, NotAutomorphism
from .expr import evaluate
from .linalg import Matrix, Subspace, quotient_representatives

SAMPLE_NUMERATORS = range(-4, 5)
SAMPLE_DENOMINATORS = (1, 2, 3)


@dataclass(frozen=True)
class AutTemplate:
    """A matrix family given by polynomial entries in template variables.

    ``entries`` is row-major; ``nonzero`` lists expressions that must not
    vanish for an instantiation to be allowed (e.g. ``"x"``).
    """

    entries: tuple[tuple[str, ...], ...]
    variables: tuple[str, ...]
    nonzero: tuple[str, ...] = ()

    def instantiate(self, values: Mapping[str, Fraction], params: Mapping[str, Fraction] | None = None) -> Matrix:
        env = dict(params or {})
        env.update(values)
        return Matrix.from_rows([[evaluate(e, env) for e in row] for row in self.entries], len(self.entries))

    def allows(self, values: Mapping[str, Fraction], params: Mapping[str, Fraction] | None = None) -> bool:
        env = dict(params or {})
        env.update(values)
        return all(evaluate(c, env) != 0 for c in self.nonzero)


@dataclass(frozen=True)
class ActionFormula:
    """alpha*_i as expressions in alpha1, alpha2, ..., the template variables and parameters."""

    images: tuple[str, ...]

    def evaluate(self, alphas: Sequence[Fraction], env: Mapping[str, Fraction]) -> tuple[Fraction, ...]:
        scope = dict(env)
        scope.update({f"alpha{i + 1}": Fraction(a) for i, a in enumerate(alphas)})
        return tuple(evaluate(e, scope) for e in self.images)


def is_automorphism(a: Algebra, m: Matrix) -> bool:
    n = a.dim
    if m.rows != n or m.cols != n:
        raise DimensionMismatch(f"{m.rows}x{m.cols} matrix on a {n}-dimensional algebra")
    if not m.is_invertible():
        return False
    cols = m.columns()
    for i in range(n):
        for j in range(n):
            if m.apply(a.structure[i][j]) != a.multiply(cols[i], cols[j]):
                return False
    return True


def act_on_cocycle(m: Matrix, theta: BilinearForm) -> BilinearForm:
    if m.rows != m.cols or theta.rows != m.rows or theta.cols != m.cols:
        raise DimensionMismatch("matrix and form sizes differ")
    return m.transpose() @ theta @ m


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(SAMPLE_NUMERATORS), rng.choice(SAMPLE_DENOMINATORS))


def random_instantiation(
    template: AutTemplate, rng: random.Random, params: Mapping[str, Fraction] | None = None, tries: int = 1000
) -> dict[str, Fraction]:
    for _ in range(tries):
        values = {v: random_rational(rng) for v in template.variables}
        if template.allows(values, params):
            return values
    raise ValueError("could not sample template variables satisfying the constraints")


def adapted_cohomology(a: Algebra, nablas: Sequence[BilinearForm]) -> CohomologyData:
    """Cohomology whose first representatives are ``nablas``, completed to a basis of H^2.

    Raises ValueError when the nablas are not independent modulo B^2.
    """
    base = cohomology(a)
    n = a.dim
    listed = Subspace(n * n, base.b2.basis + tuple(t.flatten() for t in nablas))
    if listed.dim != base.b2.dim + len(nablas):
        raise ValueError("the listed cocycles are not independent modulo coboundaries")
    extra = [unflatten_form(v, n) for v in quotient_representatives(listed, base.z2)]
    return cohomology(a, list(nablas) + extra)


@dataclass
class ActionReport:
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    non_automorphisms: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.mismatches and not self.non_automorphisms


def verify_action_formula(
    a: Algebra,
    nablas: Sequence[BilinearForm],
    template: AutTemplate,
    formula: ActionFormula,
    samples: Sequence[tuple[Mapping[str, Fraction], Sequence[Fraction]]],
    params: Mapping[str, Fraction] | None = None,
    data: CohomologyData | None = None,
) -> ActionReport:
    """Compare formula alpha* with the class of m^T (sum alpha_i nabla_i) m for each sample.

    A sample is ``(template values, alphas)``. Classes are read in the basis
    that starts with the nablas; any component outside their span counts as a
    mismatch.
    """
    params = dict(params or {})
    data = data or adapted_cohomology(a, nablas)
    k = len(nablas)
    report = ActionReport()
    for values, alphas in samples:
        m = template.instantiate(values, params)
        record = {"values": {v: str(x) for v, x in values.items()}, "alphas": [str(x) for x in alphas]}
        if not is_automorphism(a, m):
            report.non_automorphisms.append(record)
            continue
        theta = form_combination(alphas, nablas, a.dim)
        coords = reduce_class(data, act_on_cocycle(m, theta))
        env = dict(params)
        env.update(values)
        expected = formula.evaluate(alphas, env)
        report.checked += 1
        if tuple(coords[:k]) != expected or any(coords[k:]):
            record["computed"] = [str(c) for c in coords]
            record["formula"] = [str(c) for c in expected]
            report.mismatches.append(record)
    return report


def random_samples(
    template: AutTemplate, count: int, k: int, rng: random.Random, params: Mapping[str, Fraction] | None = None
) -> list[tuple[dict[str, Fraction], tuple[Fraction, ...]]]:
    return [
        (random_instantiation(template, rng, params), tuple(random_rational(rng) for _ in range(k)))
        for _ in range(count)
    ]


def push_classes(data: CohomologyData, m: Matrix, classes: Sequence[Sequence[Fraction]]) -> list[tuple]:
    """Images of H^2 coordinate vectors under the action of m."""
    out = []
    for c in classes:
        theta = form_combination(c, data.h2_reps, data.dim)
        out.append(reduce_class(data, act_on_cocycle(m, theta)))
    return out


def same_orbit(a: Algebra, data: CohomologyData, w1: Subspace, w2: Subspace, m: Matrix) -> bool:
    """True iff m carries the subspace w1 of H^2 (class coordinates) exactly onto w2."""
    if not is_automorphism(a, m):
        raise NotAutomorphism("matrix is not an automorphism of the algebra")
    pushed = Subspace.span(push_classes(data, m, w1.basis), data.h2_dim)
    return pushed == w2
