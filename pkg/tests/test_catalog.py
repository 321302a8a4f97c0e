from fractions import Fraction as F

import pytest

from novikov_lab.algebra import annihilator, check_novikov, is_one_generated, power_chain
from novikov_lab.catalog import (
    BASE_CASES,
    ENTRIES,
    catalog_entries,
    check_equivalence,
    entries_of_dim,
    fingerprint_collisions,
    get_entry,
    label,
    verify_catalog,
    verify_entry,
)
from novikov_lab.catalog_data import CONSTRUCTIONS, EQUIVALENCES
from novikov_lab.dsl import parse_algebra
from novikov_lab.errors import ConstraintViolation, UnknownDimension, UnknownEntry
from novikov_lab.isomorphism import IsoWitness, find_isomorphism

from oracles import identity_residuals, table
from support import algebra

FAMILY_COUNTS = {1: 1, 2: 1, 3: 2, 4: 5, 5: 13, 6: 38}


@pytest.mark.parametrize("dim, count", sorted(FAMILY_COUNTS.items()))
def test_family_counts(dim, count):
    names = [e.id for e in entries_of_dim(dim)]
    assert len(names) == count
    assert names == [f"N{dim}_{k:02d}" for k in range(1, count + 1)]


def test_two_dim_list_is_one_row():
    (a,) = catalog_entries(2)
    assert a == parse_algebra("dim 2\ne1*e1 = e2")


def test_unknown_dimension():
    with pytest.raises(UnknownDimension):
        catalog_entries(7)


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        get_entry("N5_99")


def test_constraint_failures_are_skipped_with_notice():
    skipped = []
    algebras = catalog_entries(5, {"lambda": 0}, skipped)
    assert len(algebras) == 12 and skipped == ["N5_04"]


def test_instantiation_checks_constraints():
    with pytest.raises(ConstraintViolation):
        get_entry("N5_04").instantiate({"lambda": 0})
    assert get_entry("N5_04").instantiate({"lambda": 0}, check=False).dim == 5


def test_labels():
    assert label("N5_03", {"lambda": F(1, 2), "mu": F(-3)}) == "N5_03(1/2,-3)"
    assert label("N5_01", {}) == "N5_01"


@pytest.mark.parametrize("entry_id", sorted(ENTRIES))
def test_document_parses_to_the_same_algebra(entry_id):
    e = get_entry(entry_id)
    params = e.resolve()
    assert parse_algebra(e.document, params) == e.instantiate(params)


@pytest.mark.parametrize("entry_id", sorted(ENTRIES))
def test_default_sample_is_sound(entry_id):
    a = algebra(entry_id)
    assert check_novikov(a) == []
    assert not any(identity_residuals(table(a)))
    assert power_chain(a)[-1] == 0
    assert is_one_generated(a)[0]


@pytest.mark.parametrize("entry_id", ["N4_03", "N5_02", "N5_11", "N6_20", "N6_34"])
@pytest.mark.parametrize("value", [F(-1), F(1, 3), F(5, 2)])
def test_other_parameter_values_stay_novikov(entry_id, value):
    e = get_entry(entry_id)
    bindings = {p: value + k for k, p in enumerate(e.params)}
    if e.violated(e.resolve(bindings)):
        pytest.skip("outside the family constraints")
    assert check_novikov(e.instantiate(bindings)) == []


def test_generator_words_are_attached():
    a = algebra("N6_38", 2)
    assert a.generator_words is not None


class TestVerifyEntry:
    def test_four_dim_generic_row(self):
        r = verify_entry("N4_01")
        assert r.status == "pass" and not r.hard_failures
        assert r.h2_dim == 3
        assert r.novikov_ok and r.nilpotent_ok and r.one_generated_ok
        assert r.nabla_in_Z2 and r.nabla_independent_mod_B2
        assert r.aut_template_ok and r.action_formula_ok and r.construction_roundtrip_ok

    def test_five_dim_family_at_half(self):
        r = verify_entry("N5_07", {"lambda": F(1, 2)})
        assert r.status == "pass"
        assert r.base_case.case == "N5_07"
        assert len(BASE_CASES["N5_07"].nablas) == 2
        assert r.nabla_in_Z2 and r.nabla_independent_mod_B2

    def test_degenerate_point_is_flagged(self):
        r = verify_entry("N5_03", {"lambda": 0, "mu": 0})
        assert r.annihilator_dim == 2
        assert r.degenerate and r.status == "degenerate"
        assert not r.hard_failures
        assert r.annihilator_dim == annihilator(algebra("N5_03", 0, 0)).dim

    def test_pinned_base_case_is_used(self):
        assert verify_entry("N4_03", {"lambda": 0}).base_case.case == "N4_03(0)"
        assert verify_entry("N4_03", {"lambda": 1}).base_case.case == "N4_03(1)"
        assert verify_entry("N4_03", {"lambda": 3}).base_case.case == "N4_03"

    def test_deterministic(self):
        assert verify_entry("N5_02", seed=4) == verify_entry("N5_02", seed=4)


@pytest.mark.parametrize("entry_id", sorted(ENTRIES))
def test_every_entry_passes_at_default(entry_id):
    r = verify_entry(entry_id)
    assert r.status == "pass", (r.hard_failures, r.notices)
    if r.roundtrip is not None:
        assert r.roundtrip.status == "witness"


def test_every_construction_has_a_target():
    assert {c.target for c in CONSTRUCTIONS} == set(ENTRIES) - {"N1_01"}


def test_catalog_report_order_and_skips():
    skipped = []
    reports = verify_catalog(4, {"lambda": 0}, skipped=skipped)
    assert [r.id for r in reports] == ["N4_01", "N4_02", "N4_03", "N4_04", "N4_05"]
    assert skipped == []


def test_claimed_equivalences_are_listed():
    assert len(EQUIVALENCES) == 9
    row = check_equivalence(EQUIVALENCES[0])
    assert row.status == "witness" and row.matrix is not None


@pytest.mark.parametrize("entry_id", ["N3_02", "N5_13", "N6_01"])
def test_entry_against_itself(entry_id):
    a = algebra(entry_id)
    assert isinstance(find_isomorphism(a, a), IsoWitness)


def test_fingerprint_collisions_are_only_reported():
    pairs = fingerprint_collisions(5)
    assert ("N5_05", "N5_06") in pairs
    assert all(isinstance(p, tuple) and len(p) == 2 for p in pairs)
    names = {a.name for a in catalog_entries(5)}
    assert all(x in names and y in names and x != y for x, y in pairs)
