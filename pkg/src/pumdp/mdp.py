"""MDP verification by minor enumeration, plus brute-force distance oracles.

Column indices are 0-based throughout.  A column set of the sliding matrix
G_j^c is non-trivial when, for s = 1..j, its element at position s*k is at
least s*n, i.e. at most s*k columns come from the first s blocks.
"""

from __future__ import annotations

import itertools
import math
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kernels
from .codes import ConvCode, compute_degree, sliding_matrix
from .errors import CapacityError, ParameterError, UsageError
from .gf import Level
from .matrix import colex_subsets, hstack, is_mds_matrix, rank, submatrix

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class ColumnIndexSet:
    j: int
    indices: tuple[int, ...]

    def blocks(self, n: int) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.j + 1)]
        for t in self.indices:
            out[t // n].append(t)
        return out

    def is_nontrivial(self, n: int, k: int) -> bool:
        idx = self.indices
        if len(idx) != (self.j + 1) * k or any(a >= b for a, b in zip(idx, idx[1:])):
            return False
        if idx and not (0 <= idx[0] and idx[-1] < (self.j + 1) * n):
            return False
        return all(idx[s * k] >= s * n for s in range(1, self.j + 1))

    def satisfies_block_form(self, n: int, k: int) -> bool:
        """Cumulative block counts never exceed (l+1)k and total (j+1)k."""
        sizes = [len(b) for b in self.blocks(n)]
        running = list(itertools.accumulate(sizes))
        return running[-1] == (self.j + 1) * k and all(c <= (l + 1) * k for l, c in enumerate(running))


@dataclass(frozen=True)
class MdpVerdict:
    is_mdp: bool
    witness: ColumnIndexSet | None
    minors_checked: int
    windows: tuple[int, ...] = ()
    zero_minors: int | None = None  # filled in full-scan mode
    computed_degree: int | None = None
    elapsed: float = 0.0

    def __bool__(self) -> bool:
        return self.is_mdp


def _lower_bounds(n: int, k: int, j: int) -> list[int]:
    lower = [0] * ((j + 1) * k)
    for s in range(1, j + 1):
        lower[s * k] = s * n
    return lower


def nontrivial_sets(n: int, k: int, j: int) -> Iterator[ColumnIndexSet]:
    """Non-trivial full-size column sets of G_j^c in colex order."""
    if j < 0 or not 1 <= k <= n:
        raise UsageError("need j >= 0 and 1 <= k <= n")
    for idx in colex_subsets((j + 1) * n, (j + 1) * k, _lower_bounds(n, k, j)):
        yield ColumnIndexSet(j, idx)


@lru_cache(maxsize=64)
def nontrivial_array(n: int, k: int, j: int) -> np.ndarray:
    arr = np.array(list(colex_subsets((j + 1) * n, (j + 1) * k, _lower_bounds(n, k, j))), dtype=np.intc)
    arr.setflags(write=False)
    return arr


def window_one_count(n: int, k: int) -> int:
    """Closed form for the number of non-trivial sets at j = 1."""
    return sum(math.comb(n, i) * math.comb(n, 2 * k - i) for i in range(max(0, 2 * k - n), k + 1))


def count_nontrivial(n: int, k: int, j: int) -> int:
    """Number of non-trivial sets of G_j^c, by a DP over blocks (no enumeration)."""
    ways = {0: 1}  # columns taken so far -> count
    for s in range(j + 1):
        cap = (s + 1) * k
        nxt: dict[int, int] = {}
        for used, w in ways.items():
            for c in range(0, min(n, cap - used) + 1):
                nxt[used + c] = nxt.get(used + c, 0) + w * math.comb(n, c)
        ways = nxt
    return ways.get((j + 1) * k, 0)


def L_of(n: int, k: int, delta: int) -> int:
    return delta // k + delta // (n - k)


def _scan_chunk(args) -> tuple[int, int, int]:
    arr, rows, cols, tables, full_scan = args
    return kernels.scan_minors(arr, rows, cols, tables, full_scan)


def _scan_window(code: ConvCode, j: int, full_scan: bool, workers: int) -> tuple[int, int, int]:
    body = sliding_matrix(code, j).body
    arr = body.kernel_array(Level.EXT)
    tables = code.tower.kernel_tables(Level.EXT)
    rows = np.arange(body.rows, dtype=np.intc).reshape(1, -1)
    cols = nontrivial_array(code.n, code.k, j)
    total = len(cols)
    if workers <= 1 or total < 2 * workers:
        first, zeros, checked = kernels.scan_minors(arr, rows, cols, tables, full_scan)
    else:
        bounds = np.linspace(0, total, workers + 1).astype(int)
        jobs = [(arr, rows, cols[a:b], tables, full_scan) for a, b in zip(bounds, bounds[1:])]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_chunk, jobs))
        firsts = [f + a for (f, _, _), a in zip(parts, bounds) if f >= 0]
        first = min(firsts) if firsts else -1
        zeros = sum(z for _, z, _ in parts)
    # report what a sequential colex scan would: independent of worker count
    checked = total if (first < 0 or full_scan) else first + 1
    if not full_scan:
        zeros = 1 if first >= 0 else 0
    return first, zeros, checked


def is_mdp(
    code: ConvCode,
    j_max: int | None = None,
    *,
    all_j: bool = False,
    full_scan: bool = False,
    check_degree: bool = False,
    workers: int = 1,
) -> MdpVerdict:
    """Check every non-trivial full-size minor of G_j^c for j = j_max (default L).

    Nonvanishing at the largest window implies it for all smaller ones, so
    only j_max is scanned unless ``all_j``.  The witness is the colex-first
    vanishing column set.  With ``check_degree`` the stated delta is compared
    against ``compute_degree`` and a mismatch only warns.
    """
    start = time.perf_counter()
    computed = None
    if check_degree:
        computed = compute_degree(code)
        if computed != code.delta:
            warnings.warn(
                f"stated delta={code.delta} but the generator has degree {computed}; checking with delta={code.delta}",
                stacklevel=2,
            )
    j_max = code.L if j_max is None else j_max
    windows = tuple(range(j_max + 1)) if all_j else (j_max,)
    checked_total = 0
    zeros_total = 0
    witness = None
    for j in windows:
        first, zeros, checked = _scan_window(code, j, full_scan, workers)
        checked_total += checked
        zeros_total += zeros
        if first >= 0 and witness is None:
            witness = ColumnIndexSet(j, tuple(int(x) for x in nontrivial_array(code.n, code.k, j)[first]))
            if not full_scan:
                break
    return MdpVerdict(
        witness is None,
        witness,
        checked_total,
        windows,
        zeros_total if full_scan else None,
        computed,
        time.perf_counter() - start,
    )


@dataclass(frozen=True)
class RankCheck:
    ok: bool
    rank: int
    minimal: bool  # rank(G1) == n - k exactly

    def __bool__(self) -> bool:
        return self.ok


def g1_rank_check(code: ConvCode) -> RankCheck:
    r = rank(code.G1)
    return RankCheck(r >= code.n - code.k, r, r == code.n - code.k)


def g0x_mds_check(code: ConvCode) -> bool:
    """(G0 | X) must be MDS for an MDP code with G1 = (X | 0)."""
    n, k = code.n, code.k
    tail = submatrix(code.G1, range(k), range(n - k, n))
    if any(tail.entries):
        raise UsageError("G1 is not of the form (X | 0)")
    X = submatrix(code.G1, range(k), range(n - k))
    return bool(is_mds_matrix(hstack(code.G0.embed(), X)))


# ---------------------------------------------------------------------------
# Brute-force distances


def _row_products(code: ConvCode, G) -> np.ndarray:
    """(k, Q, n) codes of c * G[i, :] for every field element c."""
    t = code.tower
    Q = t.order
    out = np.zeros((code.k, Q, code.n), dtype=np.int64)
    rows = G.codes()
    for i in range(code.k):
        for c in range(1, Q):
            out[i, c] = [t.emul(c, g) for g in rows[i]]
    return out


def _codeword_table(code: ConvCode, G) -> np.ndarray:
    """Row u = sum_i u_i Q^i of the table holds the codes of u G."""
    t = code.tower
    S = _row_products(code, G)
    table = S[0]
    for i in range(1, code.k):
        table = t.add_codes(S[i][:, None, :], table[None, :, :]).reshape(-1, code.n)
    return table


def _weights(a: np.ndarray) -> np.ndarray:
    return np.count_nonzero(a, axis=-1)


def _need(space: int, budget: int, what: str) -> None:
    if space > budget:
        raise CapacityError(f"{what} enumerates {space} messages, over the budget of {budget}; use smaller parameters")


def column_distance_bruteforce(code: ConvCode, j: int, budget: int = DEFAULT_BUDGET) -> int:
    """min over u_0 != 0 of sum_{t<=j} wt(v_t), by enumerating u_0..u_j."""
    if j < 0:
        raise UsageError("j must be >= 0")
    M = code.tower.order**code.k
    _need(M ** (j + 1), budget, f"column distance at j={j}")
    t = code.tower
    A = _codeword_table(code, code.G0)
    wA = _weights(A)
    if j == 0:
        return int(wA[1:].min())
    B = _codeword_table(code, code.G1)
    tail: dict[int, int] = {}

    def last(u_prev: int) -> int:
        if u_prev not in tail:
            tail[u_prev] = int(_weights(t.add_codes(B[u_prev][None, :], A)).min())
        return tail[u_prev]

    best = math.inf
    for prefix in itertools.product(range(M), repeat=j):
        if prefix[0] == 0:
            continue
        acc = int(wA[prefix[0]])
        for a, b in zip(prefix, prefix[1:]):
            acc += int(_weights(t.add_codes(B[a], A[b])))
            if acc >= best:
                break
        else:
            best = min(best, acc + last(prefix[-1]))
    return int(best)


def free_distance_check(code: ConvCode, degree_cap: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum weight over codewords of messages with deg u <= degree_cap and u_0 != 0.

    Enumeration gives an upper bound on the free distance; in the k > n-k =
    delta regime it is also bounded below by 2(n-k)+1 for MDP codes.
    """
    n, k = code.n, code.k
    if not (k > n - k == code.delta):
        raise ParameterError("free_distance_check needs k > n - k = delta")
    M = code.tower.order**k
    _need(sum(M ** (T + 1) for T in range(degree_cap + 1)), budget, "free distance")
    t = code.tower
    A = _codeword_table(code, code.G0)
    B = _codeword_table(code, code.G1)
    wA, wB = _weights(A), _weights(B)
    best = int((wA[1:] + wB[1:]).min())
    tail: dict[int, int] = {}

    def last(u_prev: int) -> int:
        if u_prev not in tail:
            tail[u_prev] = int((_weights(t.add_codes(B[u_prev][None, :], A)) + wB).min())
        return tail[u_prev]

    for T in range(1, degree_cap + 1):
        for prefix in itertools.product(range(M), repeat=T):
            if prefix[0] == 0:
                continue
            acc = int(wA[prefix[0]])
            for a, b in zip(prefix, prefix[1:]):
                acc += int(_weights(t.add_codes(B[a], A[b])))
            best = min(best, acc + last(prefix[-1]))
    return best
