from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novikov_lab.errors import AmbientMismatch, NotContained
from novikov_lab.linalg import Matrix, Subspace, nullspace, quotient_representatives, rref, solve, subspaces_equal

from oracles import rank as oracle_rank

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # Bias towards zeros so low-rank matrices are common.
    entry = st.one_of(st.just(F(0)), rationals)
    rows = draw(st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, c)


class TestRref:
    def test_identity_is_fixed(self):
        m = Matrix.identity(3)
        red, pivots, rank = rref(m)
        assert red == m and pivots == [0, 1, 2] and rank == 3

    def test_zero_matrix(self):
        m = Matrix.zeros(2, 2)
        red, pivots, rank = rref(m)
        assert red == m and pivots == [] and rank == 0

    def test_dependent_rows(self):
        red, pivots, rank = rref(Matrix.from_rows([[1, 2], [2, 4]]))
        assert red == Matrix.from_rows([[1, 2], [0, 0]])
        assert pivots == [0] and rank == 1

    def test_fractions_stay_exact(self):
        red, _, _ = rref(Matrix.from_rows([[3, 1], [1, F(1, 3)]]))
        assert red.entries[0] == (F(1), F(1, 3))

    @given(matrices())
    def test_idempotent(self, m):
        once = rref(m)[0]
        assert rref(once)[0] == once

    @given(matrices())
    def test_rank_matches_oracle(self, m):
        assert rref(m)[2] == oracle_rank(m.entries)


class TestNullspace:
    def test_identity_kernel_is_zero(self):
        assert nullspace(Matrix.identity(3)).dim == 0

    def test_zero_matrix_kernel_is_everything(self):
        assert nullspace(Matrix.zeros(2, 3)) == Subspace.full(3)

    def test_single_row(self):
        m = Matrix.from_rows([[1, 2, 0]])
        k = nullspace(m)
        assert k.dim == 2
        for v in [(-2, 1, 0), (0, 0, 1)]:
            assert k.contains(v)
            assert m.apply(tuple(map(F, v))) == (0,)

    @settings(max_examples=150)
    @given(matrices(max_rows=6, max_cols=6))
    def test_rank_nullity(self, m):
        k = nullspace(m)
        assert k.dim + rref(m)[2] == m.cols
        for v in k.basis:
            assert not any(m.apply(v))


class TestQuotient:
    def test_equal_spaces(self):
        full = Subspace.full(3)
        assert quotient_representatives(full, full) == []

    def test_from_zero(self):
        full = Subspace.span([(1, 0), (0, 1)], 2)
        reps = quotient_representatives(Subspace.zero(2), full)
        assert len(reps) == 2 and Subspace.span(reps, 2) == full

    def test_completes_a_line(self):
        sub = Subspace.span([(1, 0, 0)], 3)
        reps = quotient_representatives(sub, Subspace.full(3))
        assert len(reps) == 2
        assert oracle_rank([(1, 0, 0)] + list(reps)) == 3

    def test_not_contained(self):
        with pytest.raises(NotContained):
            quotient_representatives(Subspace.span([(1, 0)], 2), Subspace.span([(0, 1)], 2))


class TestSubspaces:
    def test_scaling(self):
        assert subspaces_equal(Subspace.span([(1, 0)], 2), Subspace.span([(2, 0)], 2))

    def test_different_lines(self):
        assert not subspaces_equal(Subspace.span([(1, 0)], 2), Subspace.span([(0, 1)], 2))

    def test_two_vectors_fill_the_plane(self):
        assert subspaces_equal(Subspace.span([(1, 1), (1, -1)], 2), Subspace.full(2))

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatch):
            subspaces_equal(Subspace.full(2), Subspace.full(3))

    def test_canonical_rows(self):
        s = Subspace.span([(0, 2, 4), (3, 0, 3), (3, 2, 7)], 3)
        assert s.basis == ((1, 0, 1), (0, 1, 2))

    @given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=1, max_size=5), st.randoms())
    def test_order_insensitive(self, vectors, rnd):
        shuffled = list(vectors)
        rnd.shuffle(shuffled)
        assert Subspace.span(vectors, 4).basis == Subspace.span(shuffled, 4).basis

    @given(
        st.lists(st.lists(rationals, min_size=4, max_size=4), max_size=4),
        st.lists(st.lists(rationals, min_size=4, max_size=4), max_size=4),
    )
    def test_intersection_dimension(self, us, vs):
        a, b = Subspace.span(us, 4), Subspace.span(vs, 4)
        both = a & b
        assert both.dim == a.dim + b.dim - (a + b).dim
        assert both.is_subspace_of(a) and both.is_subspace_of(b)


def test_solve():
    m = Matrix.from_rows([[1, 1], [1, -1]])
    assert solve(m, (F(3), F(1))) == (2, 1)
    assert solve(Matrix.from_rows([[1, 1], [2, 2]]), (F(1), F(3))) is None
