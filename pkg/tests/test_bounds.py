from __future__ import annotations

import itertools

import numpy as np
import pytest

from pumdp.bounds import (
    bound_report,
    column_bound,
    d_individual,
    d_total,
    factor_value,
    homogeneity_check,
    individual_degree,
    single_factor_witness,
    minor_factors,
    minor_product_eval,
    singleton_bound,
    standard_form,
)
from pumdp.codes import ConvCode, cauchy_construct
from pumdp.errors import UsageError
from pumdp.gf import Level
from pumdp.matrix import FieldMatrix, hstack, is_mds_matrix
from pumdp.mdp import is_mdp


def total_degree_oracle(n, k):
    # each non-trivial factor with i columns in the first block has degree k - i in X
    tot = 0
    for idx in itertools.combinations(range(2 * n), 2 * k):
        i = sum(1 for c in idx if c < n)
        if i <= k:
            tot += k - i
    return tot


def individual_degree_oracle(n, k, r=0, s=0):
    # factors with |I| < k that take X column s and leave identity column r out
    cnt = 0
    for idx in itertools.combinations(range(2 * n), 2 * k):
        I = [c for c in idx if c < n]
        if len(I) < k and (n + s) in idx and r not in I:
            cnt += 1
    return cnt


@pytest.mark.parametrize("n", range(1, 9))
def test_degree_counts_match_enumeration(n):
    for k in range(1, n + 1):
        assert d_total(n, k) == total_degree_oracle(n, k)
        if k < n:
            assert d_individual(n, k) == individual_degree_oracle(n, k)


def test_small_values():
    assert d_total(3, 2) == 3
    assert d_individual(3, 2) == 2


@pytest.mark.parametrize("n", range(1, 11))
def test_dual_symmetry(n):
    for k in range(1, n + 1):
        assert d_total(n, k) == d_total(n, n - k)
        assert d_individual(n, k) == d_individual(n, n - k)


def test_report():
    r = bound_report(3, 2, 1)
    assert (r.L, r.singleton, r.column_bounds, r.d_total, r.d_individual, r.q_threshold) == (1, 3, (2, 3), 3, 2, 3)
    assert r.as_dict()["column_bounds"] == [2, 3]
    assert singleton_bound(7, 4, 3) == 3 * 1 + 3 + 1
    assert column_bound(7, 4, 1) == 7
    with pytest.raises(UsageError):
        bound_report(3, 3, 1)


def _small_setup(d=4, seed=2):
    code = cauchy_construct(3, 2, d=d, seed=seed)
    return code.tower, code.G0.embed()


def test_homogeneity_random():
    t, G0 = _small_setup()
    rng = np.random.default_rng(1)
    for _ in range(5):
        X = FieldMatrix.from_codes(t, Level.EXT, rng.integers(0, t.order, (2, 1)).tolist())
        s = t.element(int(rng.integers(1, t.order)))
        assert homogeneity_check(G0, X, s)
    with pytest.raises(UsageError):
        homogeneity_check(G0, X, t.zero())


def test_trivial_factors_are_constants():
    t, G0 = _small_setup()
    X = FieldMatrix.from_codes(t, Level.EXT, [[5], [9]])
    trivial = [v for c, v in minor_factors(G0, X) if sum(1 for x in c if x < 3) == 2]
    Y = FieldMatrix.from_codes(t, Level.EXT, [[77], [1]])
    trivial_y = [v for c, v in minor_factors(G0, Y) if sum(1 for x in c if x < 3) == 2]
    assert trivial == trivial_y and all(trivial)
    assert len(minor_factors(G0, X)) == 12
    assert len(minor_factors(G0, X, include_trivial=False)) == 12 - 9  # C(3,2)^2 sets have |I| = k


def test_minor_product_matches_mdp_on_examples():
    t, G0 = _small_setup(d=3, seed=0)
    for codes in ([[0], [0]], [[1], [0]], [[0], [1]], [[7], [30]]):
        X = FieldMatrix.from_codes(t, Level.EXT, codes)
        G1 = hstack(X, FieldMatrix.zeros(t, 2, 2))
        mdp = is_mdp(ConvCode(t, 3, 2, 1, G0, G1)).is_mdp
        assert bool(minor_product_eval(G0, X)) == mdp


def test_standard_form():
    code = cauchy_construct(3, 2)
    S = standard_form(code.G0)
    assert S.codes() == [[1, 0, 4], [0, 1, 1]]
    assert is_mds_matrix(S)
    t = code.tower
    with pytest.raises(UsageError):
        standard_form(FieldMatrix.from_codes(t, Level.BASE, [[1, 2, 3], [2, 4, 1]]))


def test_single_factor_witness_makes_factor_nonzero():
    code = cauchy_construct(5, 3, d=2, seed=1)
    G0 = code.G0.embed()
    n, k = 5, 3
    for idx in itertools.combinations(range(2 * n), 2 * k):
        I = tuple(c for c in idx if c < n)
        J = tuple(c for c in idx if c >= n)
        if len(I) > k:
            continue
        X = single_factor_witness(G0, I, J)
        assert factor_value(G0, X, idx), idx


def test_individual_degree_bounded():
    t, G0 = _small_setup()
    S = standard_form(G0)
    rng = np.random.default_rng(4)
    X = FieldMatrix.from_codes(t, Level.EXT, rng.integers(1, t.order, (2, 1)).tolist())
    for r in range(2):
        deg = individual_degree(S, X, r, 0)
        assert 0 <= deg <= d_individual(3, 2)


