from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pumdp.errors import UsageError
from pumdp.gf import Fe, Level, tower_create
from pumdp.matrix import (
    FieldMatrix,
    colex_subsets,
    det,
    hstack,
    is_mds_matrix,
    is_superregular,
    mat_vec,
    rank,
    submatrix,
    vstack,
)
from oracles import det_cofactor, det_leibniz, make_towers, naive_of, rank_by_minors

TOWERS = make_towers()


@st.composite
def square(draw, max_n=4):
    t = draw(st.sampled_from(TOWERS))
    n = draw(st.integers(1, max_n))
    # bias towards zeros so singular matrices show up often
    entry = st.one_of(st.just(0), st.integers(0, t.order - 1))
    rows = [[draw(entry) for _ in range(n)] for _ in range(n)]
    return t, rows


@st.composite
def rect(draw, max_dim=4):
    t = draw(st.sampled_from(TOWERS))
    r, c = draw(st.integers(1, max_dim)), draw(st.integers(1, max_dim))
    entry = st.one_of(st.just(0), st.just(1), st.integers(0, t.order - 1))
    rows = [[draw(entry) for _ in range(c)] for _ in range(r)]
    # sometimes make a row dependent on the others
    if r > 1 and draw(st.booleans()):
        k = draw(st.integers(0, t.order - 1))
        F = naive_of(t)
        rows[-1] = [F.add(F.mul(k, x), y) for x, y in zip(rows[0], rows[1])] if r > 2 else [F.mul(k, x) for x in rows[0]]
    return t, rows


@settings(max_examples=1000, deadline=None)
@given(square())
def test_det_matches_cofactor(case):
    t, rows = case
    M = FieldMatrix.from_codes(t, Level.EXT, rows)
    assert det(M).value == det_cofactor(naive_of(t), rows)


@settings(max_examples=200, deadline=None)
@given(square(max_n=3))
def test_cofactor_matches_leibniz(case):
    # the two oracles check each other
    t, rows = case
    F = naive_of(t)
    assert det_cofactor(F, rows) == det_leibniz(F, rows)


@settings(max_examples=1000, deadline=None)
@given(rect())
def test_rank_matches_minor_oracle(case):
    t, rows = case
    M = FieldMatrix.from_codes(t, Level.EXT, rows)
    assert rank(M) == rank_by_minors(naive_of(t), rows)


def test_det_small_example():
    t = tower_create(5)
    M = FieldMatrix.from_codes(t, Level.BASE, [[1, 2], [3, 4]])
    assert det(M).value == 3
    assert det(M).level is Level.BASE


def test_det_base_level_in_extension():
    t = tower_create(5, 1, 2, seed=1)
    M = FieldMatrix.from_codes(t, Level.BASE, [[1, 2], [3, 4]])
    assert det(M).value == 3


def test_det_nonsquare():
    t = tower_create(5)
    with pytest.raises(UsageError):
        det(FieldMatrix.zeros(t, 2, 3))


def test_matmul_and_identity():
    t = tower_create(7)
    A = FieldMatrix.from_codes(t, Level.BASE, [[1, 2], [3, 4]])
    I = FieldMatrix.identity(t, 2, Level.BASE)
    assert (A @ I) == A
    assert (A @ A).codes() == [[0, 3], [1, 1]]  # [[7, 10], [15, 22]] mod 7
    assert A.transpose().codes() == [[1, 3], [2, 4]]


def test_stack_shapes():
    t = tower_create(5)
    A = FieldMatrix.zeros(t, 2, 3)
    assert hstack(A, A).shape == (2, 6)
    assert vstack(A, A).shape == (4, 3)
    with pytest.raises(UsageError):
        hstack(A, FieldMatrix.zeros(t, 3, 3))


def test_submatrix_checks():
    t = tower_create(5)
    A = FieldMatrix.from_codes(t, Level.BASE, [[1, 2, 3], [4, 0, 1]])
    assert submatrix(A, [1], [0, 2]).codes() == [[4, 1]]
    with pytest.raises(UsageError):
        submatrix(A, [1, 0], [0])
    with pytest.raises(UsageError):
        submatrix(A, [0], [3])


def test_mat_vec():
    t = tower_create(5)
    A = FieldMatrix.from_codes(t, Level.BASE, [[1, 2, 3], [4, 0, 1]])
    u = [t.element(2, Level.BASE), t.element(1, Level.BASE)]
    assert [e.value for e in mat_vec(u, A)] == [1, 4, 2]


@pytest.mark.parametrize("n,r", [(5, 2), (6, 3), (4, 4), (4, 0)])
def test_colex_order(n, r):
    got = list(colex_subsets(n, r))
    want = sorted(itertools.combinations(range(n), r), key=lambda s: tuple(reversed(s)))
    assert got == want


def test_colex_lower_bounds():
    got = list(colex_subsets(6, 3, [0, 0, 4]))
    want = [s for s in sorted(itertools.combinations(range(6), 3), key=lambda s: tuple(reversed(s))) if s[2] >= 4]
    assert got == want


def test_superregular_witness_is_first_zero():
    t = tower_create(7)
    A = FieldMatrix.from_codes(t, Level.BASE, [[1, 2, 3], [2, 4, 5]])  # columns 0, 1 dependent
    res = is_superregular(A)
    assert not res
    assert res.witness == ((0, 1), (0, 1))
    full = is_superregular(A, full_scan=True)
    assert full.zero_minors == 1
    assert full.minors_checked == 6 + 3


def test_superregular_zero_entry():
    t = tower_create(7)
    A = FieldMatrix.from_codes(t, Level.BASE, [[1, 0], [2, 3]])
    assert is_superregular(A).witness == ((0,), (1,))


def test_mds_matrix():
    t = tower_create(7)
    ok = FieldMatrix.from_codes(t, Level.BASE, [[1, 0, 1], [0, 1, 1]])
    bad = FieldMatrix.from_codes(t, Level.BASE, [[1, 0, 0], [0, 1, 0]])
    assert is_mds_matrix(ok)
    assert is_mds_matrix(bad).witness == ((0, 1), (0, 2))
    with pytest.raises(UsageError):
        is_mds_matrix(FieldMatrix.zeros(t, 3, 2))


def test_matrix_rejects_mixed_towers():
    a, b = tower_create(5), tower_create(7)
    with pytest.raises(UsageError):
        FieldMatrix.from_rows(a, [[Fe(b, 1, Level.BASE)]])
