from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pumdp.codes import cauchy_construct
from pumdp.encoder import MessageStream, asymptotic_note, count_report, encode, encode_with_counts
from pumdp.errors import UsageError
from pumdp.gf import counting_mults
from pumdp.mdp import free_distance_check

C32 = cauchy_construct(3, 2)
C74 = cauchy_construct(7, 4)


def _naive_encode(code, msg_codes):
    """Coefficients of u(z) (G0 + G1 z) by polynomial multiplication on codes."""
    t = code.tower
    G0, G1 = code.G0.codes(), code.G1.codes()
    T = len(msg_codes)
    out = [[0] * code.n for _ in range(T + 1)]
    for j, u in enumerate(msg_codes):
        for shift, G in ((0, G0), (1, G1)):
            for c in range(code.n):
                for i in range(code.k):
                    out[j + shift][c] = t.eadd(out[j + shift][c], t.emul(u[i], G[i][c]))
    return out


def test_zero_message():
    msg = MessageStream.from_codes(C32, [[0, 0], [0, 0]])
    assert encode(C32, msg).weight() == 0
    assert len(encode(C32, msg).blocks) == 3


def test_single_block():
    msg = MessageStream.from_codes(C32, [[1, 2]])
    cw = encode(C32, msg)
    assert cw.codes() == _naive_encode(C32, [[1, 2]])
    assert len(cw.blocks) == 2


def test_exhaustive_small_mode_equivalence():
    count = 0
    for T in range(3):
        for flat in itertools.product(range(5), repeat=2 * (T + 1)):
            blocks = [list(flat[2 * i : 2 * i + 2]) for i in range(T + 1)]
            msg = MessageStream.from_codes(C32, blocks)
            d, s = encode(C32, msg, "dense"), encode(C32, msg, "structured")
            assert d == s
            count += 1
    assert count == 25 + 25**2 + 25**3


def test_matches_polynomial_product():
    rng = np.random.default_rng(3)
    for _ in range(20):
        msg = MessageStream.random(C74, 4, rng)
        assert encode(C74, msg).codes() == _naive_encode(C74, msg.codes())


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_linearity(length, seed):
    rng = np.random.default_rng(seed)
    a, b = MessageStream.random(C74, length, rng), MessageStream.random(C74, length, rng)
    s = MessageStream(tuple(tuple(x + y for x, y in zip(p, q)) for p, q in zip(a.blocks, b.blocks)))
    ea, eb, es = encode(C74, a), encode(C74, b), encode(C74, s)
    assert es.blocks == tuple(tuple(x + y for x, y in zip(p, q)) for p, q in zip(ea.blocks, eb.blocks))


def test_nonzero_codewords_meet_free_distance():
    dfree = free_distance_check(C32, degree_cap=1)
    assert dfree == 2 * (3 - 2) + 1
    for flat in itertools.product(range(5), repeat=4):
        if any(flat):
            msg = MessageStream.from_codes(C32, [flat[:2], flat[2:]])
            assert encode(C32, msg).weight() >= dfree


@pytest.mark.parametrize("code,T,g1", [(C32, 4, 1), (C74, 10, 3)])
def test_count_report(code, T, g1):
    r = count_report(code, T, seed=1)
    kn = code.k * code.n
    assert r.g1_nonzeros == g1
    assert [s.g1_mults for s in r.per_step[1 : T + 1]] == [g1] * T
    assert [s.g1_mults for s in r.baseline_per_step[1 : T + 1]] == [kn] * T
    assert r.per_step[0].g1_mults == 0 and r.per_step[-1].g0_mults == 0
    assert len(r.per_step) == T + 2
    assert r.totals["total"] < r.baseline_totals["total"]
    assert r.totals["g1_mults"] == g1 * (T + 1)
    assert r.base_field_units(code.tower.d, 2.0)["structured"] == r.totals["total"] * code.tower.d * 2.0


def test_counts_ignore_outer_context():
    msg = MessageStream.random(C74, 3, np.random.default_rng(0))
    with counting_mults() as c:
        _, steps = encode_with_counts(C74, msg, "structured")
    assert c.count == sum(s.g0_mults + s.g1_mults for s in steps)


def test_errors():
    with pytest.raises(UsageError):
        encode(C32, MessageStream.from_codes(C74, [[0] * 4]))
    with pytest.raises(UsageError):
        encode(C32, MessageStream.from_codes(C32, [[0, 0]]), mode="fast")
    with pytest.raises(UsageError):
        count_report(C32, 0)


@pytest.mark.parametrize("n,k,d", [(7, 4, 3), (3, 2, 1)])
def test_asymptotic_note(n, k, d):
    text = asymptotic_note(n, k, d)
    assert "O(d [n log^2 n + (n-k)] M(q))" in text
    assert f"= {d} * ({n} *" in text
    assert "NOT IMPLEMENTED" in text
    assert f"k*n = {k * n}" in text
    assert "M(q^d) = O(d M(q))" in text
