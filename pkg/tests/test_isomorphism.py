from fractions import Fraction as F
from math import gcd

import pytest

from novikov_lab.algebra import Algebra, change_basis, ensure_generator_words, fingerprint
from novikov_lab.catalog import catalog_entries
from novikov_lab.errors import DimensionMismatch, MissingGeneratorWords
from novikov_lab.isomorphism import (
    IsoWitness,
    NotIsomorphicCertificate,
    Unknown,
    distinguish,
    find_isomorphism,
    rational_grid,
    verify_isomorphism,
)
from novikov_lab.linalg import Matrix

from oracles import mul, table
from support import algebra


def oracle_verify(a, b, m):
    """Witness check by raw loops over the structure constants."""
    ca, cb = table(a), table(b)
    cols = [list(c) for c in m.columns()]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = [sum(m[r, k] * ca[i][j][k] for k in range(a.dim)) for r in range(a.dim)]
            if lhs != mul(cb, cols[i], cols[j]):
                return False
    return m.is_invertible()


def test_grid_contents():
    grid = rational_grid(2)
    assert grid[0] == 0
    assert set(grid) == {F(p, q) for q in (1, 2) for p in range(-2, 3) if gcd(p, q) == 1}
    assert len(rational_grid(4)) == len(set(rational_grid(4)))


class TestDistinguish:
    def test_power_chain_first(self):
        cert = distinguish(algebra("N2_01"), Algebra.zero(2))
        assert cert.invariant == "power_chain"
        assert (cert.left, cert.right) == ((2, 1, 0), (2, 0))

    def test_four_dim_rows(self):
        cert = distinguish(algebra("N4_01"), algebra("N4_02"))
        assert isinstance(cert, NotIsomorphicCertificate)

    def test_same_algebra(self):
        assert distinguish(algebra("N5_09", 2), algebra("N5_09", 2)) is None


class TestFindIsomorphism:
    def test_self(self):
        a = algebra("N4_01")
        w = find_isomorphism(a, a)
        assert isinstance(w, IsoWitness) and w.matrix == Matrix.identity(4)

    def test_five_dim_claim(self):
        a, b = algebra("N5_04", 0, check=False), algebra("N5_02", 0)
        w = find_isomorphism(a, b)
        assert isinstance(w, IsoWitness)
        assert oracle_verify(a, b, w.matrix)

    def test_six_dim_sign_symmetry(self):
        a, b = algebra("N6_34", 1), algebra("N6_34", -1)
        w = find_isomorphism(a, b)
        assert isinstance(w, IsoWitness)
        assert oracle_verify(a, b, w.matrix)

    def test_recovers_a_random_change_of_basis(self):
        a = algebra("N5_12", 2)
        m = Matrix.from_rows(
            [[2, 0, 0, 0, 0], [1, 4, 0, 0, 0], [0, 2, 8, 0, 0], [3, 1, 0, 8, 0], [1, 0, 2, 1, 16]]
        )
        b = change_basis(a, m)
        w = find_isomorphism(a, b)
        assert isinstance(w, IsoWitness) and oracle_verify(a, b, w.matrix)

    def test_certificate_when_fingerprints_differ(self):
        assert isinstance(find_isomorphism(algebra("N4_01"), algebra("N4_02")), NotIsomorphicCertificate)

    def test_budget_exhaustion_is_unknown(self):
        result = find_isomorphism(algebra("N5_05"), algebra("N5_06"), search_budget=10)
        assert isinstance(result, Unknown) and result.nodes >= 10

    def test_needs_words(self):
        bare = Algebra(algebra("N3_01").structure)
        with pytest.raises(MissingGeneratorWords):
            find_isomorphism(bare, algebra("N3_01"))

    def test_dimensions_checked(self):
        with pytest.raises(DimensionMismatch):
            find_isomorphism(algebra("N3_01"), algebra("N4_01"))

    def test_deterministic(self):
        a, b = algebra("N6_34", 1), algebra("N6_34", -1)
        assert find_isomorphism(a, b) == find_isomorphism(a, b)


class TestVerify:
    def test_rejects_singular(self):
        a = algebra("N3_01")
        assert not verify_isomorphism(a, a, Matrix.zeros(3, 3))

    def test_rejects_wrong_map(self):
        a = algebra("N3_02", 2)
        m = Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 1]])
        assert not verify_isomorphism(a, a, m) and not oracle_verify(a, a, m)


@pytest.mark.parametrize("dim", [3, 4, 5, 6])
def test_search_respects_certificates_across_catalog(dim):
    algebras = catalog_entries(dim)
    for i, a in enumerate(algebras):
        for b in algebras[i:]:
            result = find_isomorphism(a, b)
            cert = distinguish(a, b)
            if cert is not None:
                assert result == cert
            if isinstance(result, IsoWitness):
                assert a.name == b.name or fingerprint(a) == fingerprint(b)
                assert oracle_verify(a, b, result.matrix)
            if a.name == b.name:
                assert isinstance(result, IsoWitness)
            else:
                assert not isinstance(result, IsoWitness), (a.name, b.name)


def test_words_attached_when_missing():
    q = ensure_generator_words(Algebra(algebra("N4_02").structure))
    assert q.generator_words is not None
