"""The catalog of one-generated nilpotent Novikov algebras and its verification.

Entries are built from the static tables in :mod:`novikov_lab.catalog_data`.
Verification instantiates an entry at rational parameters and rechecks,
independently of the stored data, everything the data claims: the identities,
nilpotency, one-generation, the listed cocycles, the automorphism families
with their action formulas, and the central extension it was built from.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import catalog_data as data
from .algebra import (
    Algebra,
    annihilator,
    check_novikov,
    derive_generator_words,
    fingerprint,
    is_one_generated,
    power_chain,
)
from .automorphisms import (
    ActionFormula,
    AutTemplate,
    adapted_cohomology,
    random_samples,
    verify_action_formula,
)
from .cohomology import BilinearForm, cohomology, form_combination, is_cocycle
from .dsl import parse_algebra, parse_form
from .errors import ConstraintViolation, UnknownDimension, UnknownEntry
from .expr import evaluate
from .extensions import common_annihilator, extend, is_admissible
from .isomorphism import DEFAULT_BUDGET, IsoWitness, NotIsomorphicCertificate, Unknown, find_isomorphism
from .linalg import Matrix, Subspace, unit_vector

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 20
Params = dict[str, Fraction]


def _rationals(values: Mapping[str, object] | None) -> Params:
    return {k: evaluate(v) if isinstance(v, str) else Fraction(v) for k, v in (values or {}).items()}


def format_params(params: Mapping[str, Fraction]) -> str:
    return ",".join(str(v) for v in params.values())


@dataclass(frozen=True)
class CatalogEntry:
    """One family of the catalog together with its verification data."""

    id: str
    dim: int
    params: tuple[str, ...]
    table: str
    default: tuple[Fraction, ...]
    nonzero: tuple[str, ...] = ()
    note: str = ""
    base_cases: tuple[data.BaseCaseData, ...] = ()
    constructions: tuple[data.ConstructionData, ...] = ()

    @property
    def document(self) -> str:
        return f"dim {self.dim}\n{self.table}\n"

    def resolve(self, bindings: Mapping[str, object] | None = None) -> Params:
        """Default parameters overridden by the bindings that name this entry's parameters."""
        given = _rationals(bindings)
        return {p: given.get(p, d) for p, d in zip(self.params, self.default)}

    def violated(self, params: Mapping[str, Fraction]) -> list[str]:
        return [c for c in self.nonzero if evaluate(c, params) == 0]

    def instantiate(self, bindings: Mapping[str, object] | None = None, check: bool = True) -> Algebra:
        """The algebra at the given parameters, with generator words derived from e1.

        With ``check`` on, a parameter value excluded by the entry raises
        ConstraintViolation; claimed equivalences sit on such values and
        turn the check off.
        """
        params = self.resolve(bindings)
        bad = self.violated(params)
        if check and bad:
            raise ConstraintViolation(f"{self.id} at {_show(params)}: {', '.join(bad)} must not vanish")
        a = parse_algebra(self.document, params, name=label(self.id, params))
        words = derive_generator_words(a, unit_vector(a.dim, 0)) if a.dim else None
        return a.with_words(words)


def label(entry_id: str, params: Mapping[str, Fraction]) -> str:
    return f"{entry_id}({format_params(params)})" if params else entry_id


def _show(params: Mapping[str, Fraction]) -> str:
    return ", ".join(f"{k}={v}" for k, v in params.items()) or "no parameters"


def _build_entries() -> dict[str, CatalogEntry]:
    out = {}
    for f in data.FAMILIES:
        out[f.id] = CatalogEntry(
            f.id,
            f.dim,
            f.params,
            f.table,
            tuple(evaluate(d) for d in f.default),
            f.nonzero,
            f.note,
            tuple(b for b in data.BASE_CASES if b.family == f.id),
            tuple(c for c in data.CONSTRUCTIONS if c.target == f.id),
        )
    return out


ENTRIES: dict[str, CatalogEntry] = _build_entries()
BASE_CASES: dict[str, data.BaseCaseData] = {b.id: b for b in data.BASE_CASES}


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return ENTRIES[entry_id]
    except KeyError:
        raise UnknownEntry(f"no catalog entry {entry_id!r}") from None


def entries_of_dim(dim: int) -> list[CatalogEntry]:
    found = [e for e in ENTRIES.values() if e.dim == dim]
    if not found:
        raise UnknownDimension(f"the catalog has no algebras of dimension {dim}")
    return found


def catalog_entries(
    dim: int, bindings: Mapping[str, object] | None = None, skipped: list[str] | None = None
) -> list[Algebra]:
    """All catalog algebras of one dimension, instantiated at default or given parameters.

    Entries whose constraints fail at the bindings are left out and named
    in ``skipped`` (and logged).
    """
    out = []
    for entry in entries_of_dim(dim):
        try:
            out.append(entry.instantiate(bindings))
        except ConstraintViolation as exc:
            log.info("skipping %s", exc)
            if skipped is not None:
                skipped.append(entry.id)
    return out


# --- base cases: listed cocycles and automorphism families -------------------


def _pinned(fixed: Sequence[tuple[str, str]]) -> Params:
    return {k: evaluate(v) for k, v in fixed}


def base_case_for(entry: CatalogEntry, params: Mapping[str, Fraction]) -> data.BaseCaseData | None:
    """The base case whose data applies at these parameters, if any.

    A case pinned to exactly these values wins over a generic one; a generic
    case applies only where its own constraints hold.
    """
    generic = None
    for b in entry.base_cases:
        pins = _pinned(b.fixed)
        if pins:
            if all(params.get(k) == v for k, v in pins.items()):
                return b
        elif all(evaluate(c, params) != 0 for c in b.nonzero):
            generic = b
    return generic


def base_case_params(case: data.BaseCaseData, bindings: Mapping[str, object] | None = None) -> Params:
    params = get_entry(case.family).resolve(bindings)
    params.update(_pinned(case.fixed))
    return params


def base_case_algebra(case: data.BaseCaseData, params: Mapping[str, Fraction]) -> tuple[Algebra, list[BilinearForm]]:
    entry = get_entry(case.family)
    a = entry.instantiate(params, check=False)
    return a, [parse_form(t, a.dim, params) for t in case.nablas]


def case_templates(case: data.BaseCaseData) -> list[tuple[AutTemplate, ActionFormula]]:
    return [(AutTemplate(t.rows, t.variables, t.nonzero), ActionFormula(t.formula)) for t in case.templates]


@dataclass
class BaseCaseReport:
    case: str
    params: dict[str, str]
    nabla_in_Z2: bool
    nabla_independent_mod_B2: bool
    nabla_spans_H2: bool
    h2_dim: int
    aut_template_ok: bool
    action_formula_ok: bool
    samples: int
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.nabla_in_Z2 and self.nabla_independent_mod_B2 and self.aut_template_ok and self.action_formula_ok


def verify_base_case(
    case: data.BaseCaseData,
    bindings: Mapping[str, object] | None = None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> BaseCaseReport:
    """Check the listed cocycles and every automorphism family on seeded random samples."""
    params = base_case_params(case, bindings)
    a, nablas = base_case_algebra(case, params)
    in_z2 = all(is_cocycle(a, t) for t in nablas)
    h2 = cohomology(a)
    independent = spans = False
    cdata = None
    if in_z2:
        try:
            cdata = adapted_cohomology(a, nablas)
            independent = True
            spans = len(nablas) == h2.h2_dim
        except ValueError:
            pass
    rng = random.Random(seed)
    templates_ok = formula_ok = independent
    checked = 0
    mismatches: list[dict] = []
    if cdata is not None:
        for idx, (tpl, formula) in enumerate(case_templates(case)):
            drawn = random_samples(tpl, samples, len(nablas), rng, params)
            rep = verify_action_formula(a, nablas, tpl, formula, drawn, params, cdata)
            checked += len(drawn)
            templates_ok = templates_ok and not rep.non_automorphisms
            formula_ok = formula_ok and not rep.mismatches and rep.checked == len(drawn)
            mismatches.extend({"template": idx + 1, **m} for m in rep.mismatches + rep.non_automorphisms)
    return BaseCaseReport(
        case.id,
        {k: str(v) for k, v in params.items()},
        in_z2,
        independent,
        spans,
        h2.h2_dim,
        templates_ok,
        formula_ok,
        checked,
        mismatches,
    )


# --- constructions ----------------------------------------------------------


def construction_for(entry: CatalogEntry, params: Mapping[str, Fraction]) -> data.ConstructionData | None:
    generic = None
    for c in entry.constructions:
        pins = _pinned(c.fixed)
        if pins and all(params.get(k) == v for k, v in pins.items()):
            return c
        if not pins:
            generic = c
    return generic


def construction_parts(
    c: data.ConstructionData, params: Mapping[str, Fraction]
) -> tuple[Algebra, list[BilinearForm]]:
    """Base algebra and cocycles of a construction at the target's parameters."""
    env = dict(params)
    env.update(_pinned(c.fixed))
    if c.base in BASE_CASES:
        case = BASE_CASES[c.base]
        family = get_entry(case.family)
    else:
        case = None
        family = get_entry(c.base)
    given = {k: evaluate(v, env) for k, v in c.base_params}
    base_params = {p: given.get(p, env.get(p, d)) for p, d in zip(family.params, family.default)}
    if case is not None:
        base_params.update(_pinned(case.fixed))
        base, nablas = base_case_algebra(case, base_params)
        scope = {**base_params, **env}
        cocycles = [form_combination([evaluate(x, scope) for x in row], nablas, base.dim) for row in c.nabla]
    else:
        base = family.instantiate(base_params, check=False)
        scope = {**base_params, **env}
        cocycles = [parse_form(t, base.dim, scope) for t in c.forms]
    return base, cocycles


def build_construction(c: data.ConstructionData, params: Mapping[str, Fraction]) -> Algebra:
    base, cocycles = construction_parts(c, params)
    ext = extend(base, cocycles)
    words = derive_generator_words(ext, unit_vector(ext.dim, 0))
    return ext.with_words(words)


@dataclass
class RoundTrip:
    construction: str
    base: str
    admissible: bool
    status: str  # witness | not-isomorphic | unknown
    detail: object = None


def construction_roundtrip(
    entry: CatalogEntry, params: Mapping[str, Fraction], budget: int = DEFAULT_BUDGET
) -> RoundTrip | None:
    c = construction_for(entry, params)
    if c is None:
        return None
    base, cocycles = construction_parts(c, params)
    admissible = is_admissible(base, cocycles)
    ext = build_construction(c, params)
    target = entry.instantiate(params, check=False)
    result = find_isomorphism(ext, target, budget)
    if isinstance(result, IsoWitness):
        return RoundTrip(c.id, c.base, admissible, "witness", result)
    if isinstance(result, NotIsomorphicCertificate):
        return RoundTrip(c.id, c.base, admissible, "not-isomorphic", result)
    return RoundTrip(c.id, c.base, admissible, "unknown", result)


# --- entry reports ----------------------------------------------------------


@dataclass
class EntryReport:
    id: str
    params: dict[str, str]
    constraints_ok: bool
    novikov_ok: bool
    nilpotent_ok: bool
    one_generated_ok: bool
    annihilator_dim: int
    h2_dim: int
    power_chain: list[int]
    nabla_in_Z2: bool | None = None
    nabla_independent_mod_B2: bool | None = None
    aut_template_ok: bool | None = None
    action_formula_ok: bool | None = None
    construction_roundtrip_ok: bool | None = None
    degenerate: bool = False
    base_case: BaseCaseReport | None = None
    roundtrip: RoundTrip | None = None
    notices: list[str] = field(default_factory=list)

    @property
    def hard_failures(self) -> list[str]:
        names = ["constraints_ok", "novikov_ok", "nilpotent_ok", "one_generated_ok"]
        names += ["nabla_in_Z2", "nabla_independent_mod_B2", "aut_template_ok", "action_formula_ok"]
        names.append("construction_roundtrip_ok")
        return [n for n in names if getattr(self, n) is False]

    @property
    def status(self) -> str:
        if self.hard_failures:
            return "fail"
        if self.roundtrip is not None and self.roundtrip.status == "unknown":
            return "unknown"
        return "degenerate" if self.degenerate else "pass"


def verify_entry(
    entry: CatalogEntry | str,
    bindings: Mapping[str, object] | None = None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    budget: int = DEFAULT_BUDGET,
) -> EntryReport:
    """Recheck one entry at the given parameters; every failure becomes a report field.

    The entry is flagged degenerate when its annihilator is larger than at
    the default sample or when its construction is not admissible there.
    The generic cocycle and automorphism data are then not expected to hold
    and are skipped with a notice.
    """
    if isinstance(entry, str):
        entry = get_entry(entry)
    params = entry.resolve(bindings)
    bad = entry.violated(params)
    a = entry.instantiate(params, check=False)
    chain = power_chain(a)
    nilpotent = chain[-1] == 0
    one_gen = nilpotent and is_one_generated(a)[0]
    report = EntryReport(
        entry.id,
        {k: str(v) for k, v in params.items()},
        not bad,
        not check_novikov(a),
        nilpotent,
        one_gen,
        annihilator(a).dim,
        cohomology(a).h2_dim if not check_novikov(a) else 0,
        chain,
    )
    if bad:
        report.notices.append(f"excluded parameter values: {', '.join(bad)} vanishes")
    generic_ann = annihilator(entry.instantiate(None, check=False)).dim
    if report.annihilator_dim != generic_ann:
        report.degenerate = True
        report.notices.append(
            f"annihilator dimension {report.annihilator_dim} differs from {generic_ann} at the default sample"
        )
    if not (report.novikov_ok and nilpotent):
        return report

    trip = construction_roundtrip(entry, params, budget)
    if trip is not None:
        report.roundtrip = trip
        if not trip.admissible:
            report.degenerate = True
            report.notices.append(f"construction {trip.construction} is not admissible at these parameters")
        if trip.status != "unknown":
            report.construction_roundtrip_ok = trip.status == "witness"

    case = base_case_for(entry, params)
    if case is None:
        return report
    if report.degenerate and not case.fixed:
        report.notices.append(f"generic data of {case.id} skipped at a degenerate point")
        return report
    bc = verify_base_case(case, params, seed, samples)
    report.base_case = bc
    report.nabla_in_Z2 = bc.nabla_in_Z2
    report.nabla_independent_mod_B2 = bc.nabla_independent_mod_B2
    report.aut_template_ok = bc.aut_template_ok
    report.action_formula_ok = bc.action_formula_ok
    return report


def verify_catalog(
    dim: int | None = None,
    bindings: Mapping[str, object] | None = None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    budget: int = DEFAULT_BUDGET,
    skipped: list[str] | None = None,
) -> list[EntryReport]:
    """Verify every entry (of one dimension); entries excluded at the bindings are skipped."""
    entries = entries_of_dim(dim) if dim is not None else list(ENTRIES.values())
    out = []
    for e in entries:
        if e.violated(e.resolve(bindings)):
            if skipped is not None:
                skipped.append(e.id)
            continue
        out.append(verify_entry(e, bindings, seed, samples, budget))
    return out


# --- claimed equivalences and pairwise distinctness ----------------------------


@dataclass
class EquivalenceRow:
    claim: str
    left: str
    right: str
    status: str  # witness | not-isomorphic | unknown
    matrix: Matrix | None = None
    generator_image: tuple | None = None
    nodes: int = 0
    detail: str = ""


def _side(entry_id: str, args: Sequence[str], env: Mapping[str, Fraction]) -> Algebra:
    entry = get_entry(entry_id)
    params = {p: evaluate(x, env) for p, x in zip(entry.params, args)}
    return entry.instantiate(params, check=False)


def check_equivalence(
    eq: data.EquivalenceData, bindings: Mapping[str, object] | None = None, budget: int = DEFAULT_BUDGET
) -> EquivalenceRow:
    given = _rationals(bindings)
    env = {k: given.get(k, evaluate(v)) for k, v in eq.free}
    a = _side(eq.left, eq.left_args, env)
    b = _side(eq.right, eq.right_args, env)
    result = find_isomorphism(a, b, budget)
    if isinstance(result, IsoWitness):
        return EquivalenceRow(eq.claim, a.name, b.name, "witness", result.matrix, result.generator_image, result.nodes)
    if isinstance(result, NotIsomorphicCertificate):
        detail = f"{result.invariant}: {result.left} vs {result.right}"
        return EquivalenceRow(eq.claim, a.name, b.name, "not-isomorphic", detail=detail)
    return EquivalenceRow(eq.claim, a.name, b.name, "unknown", nodes=result.nodes, detail=result.reason)


def verify_equivalences(
    bindings: Mapping[str, object] | None = None, budget: int = DEFAULT_BUDGET
) -> list[EquivalenceRow]:
    return [check_equivalence(eq, bindings, budget) for eq in data.EQUIVALENCES]


def fingerprint_collisions(dim: int, bindings: Mapping[str, object] | None = None) -> list[tuple[str, str]]:
    """Pairs of distinct entries of one dimension whose fingerprints agree at the sample.

    These pairs are indistinguishable by fingerprint; no isomorphism is
    claimed or searched for.
    """
    algebras = catalog_entries(dim, bindings)
    prints = [(a.name, fingerprint(a)) for a in algebras]
    return [
        (x, y) for i, (x, fx) in enumerate(prints) for y, fy in prints[i + 1 :] if fx == fy
    ]


def annihilator_splits(base: Algebra, cocycles: Sequence[BilinearForm]) -> bool:
    """Ann(A_theta) equals (Ann(A) cut with every Ann(theta_i)) plus the new directions V."""
    ext = extend(base, cocycles)
    n, s = base.dim, len(cocycles)
    lifted = [tuple(v) + (Fraction(0),) * s for v in common_annihilator(base, cocycles).basis]
    expected = Subspace.span(lifted + [unit_vector(n + s, n + i) for i in range(s)], n + s)
    return annihilator(ext) == expected
