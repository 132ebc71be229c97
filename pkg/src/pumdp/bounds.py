"""Distance bounds, degree counts of the minor product, and its evaluator.

The minor product P(X) multiplies every non-trivial 2k x 2k minor of
[[G0, (X | 0)], [0, G0]] and is evaluated at field points only; it is never
expanded symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

import numpy as np

from . import kernels
from .codes import _newton_degree
from .errors import UsageError
from .gf import Fe, Level
from .matrix import FieldMatrix, colex_subsets, det, submatrix
from .mdp import nontrivial_array


def L_value(n: int, k: int, delta: int) -> int:
    if not 1 <= k < n or delta < 0:
        raise UsageError("need 1 <= k < n and delta >= 0")
    return delta // k + delta // (n - k)


def singleton_bound(n: int, k: int, delta: int) -> int:
    """Generalized Singleton bound on the free distance."""
    return (n - k) * (delta // k + 1) + delta + 1


def column_bound(n: int, k: int, j: int) -> int:
    return (n - k) * (j + 1) + 1


def d_total(n: int, k: int) -> int:
    """Total degree of P(X): sum of C(n,i) C(n,j) (j-k) over i + j = 2k, i <= k <= j <= n."""
    return sum(math.comb(n, i) * math.comb(n, 2 * k - i) * (k - i) for i in range(0, k + 1) if 2 * k - i <= n)


def d_individual(n: int, k: int) -> int:
    """Bound on the degree of P(X) in any single entry of X (G0 in systematic form)."""
    return sum(
        math.comb(n - 1, i) * math.comb(n - 1, 2 * k - i - 1)
        for i in range(0, k)
        if k + 1 <= 2 * k - i <= n
    )


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    delta: int
    L: int
    singleton: int
    column_bounds: tuple[int, ...]
    d_total: int
    d_individual: int
    q_threshold: int  # fields with q >= this admit an MDP X over F_q itself

    def as_dict(self) -> dict:
        out = asdict(self)
        out["column_bounds"] = list(self.column_bounds)
        return out


def bound_report(n: int, k: int, delta: int) -> BoundReport:
    L = L_value(n, k, delta)
    di = d_individual(n, k)
    return BoundReport(
        n, k, delta, L,
        singleton_bound(n, k, delta),
        tuple(column_bound(n, k, j) for j in range(L + 1)),
        d_total(n, k),
        di,
        di + 1,
    )


# ---------------------------------------------------------------------------
# Minor product evaluation


def _window_one(G0: FieldMatrix, X: FieldMatrix) -> np.ndarray:
    k, n = G0.rows, G0.cols
    if X.rows != k or X.cols != n - k:
        raise UsageError(f"X must be {k}x{n - k} for a {k}x{n} G0")
    t = X.tower
    if G0.tower != t:
        raise UsageError("G0 and X live in different towers")
    arr = np.zeros((2 * k, 2 * n, t.d), dtype=np.intc)
    g0 = G0.kernel_array(Level.EXT)
    arr[:k, :n] = g0
    arr[k:, n:] = g0
    arr[:k, n : 2 * n - k] = X.kernel_array(Level.EXT)
    return arr


def minor_factors(G0: FieldMatrix, X: FieldMatrix, include_trivial: bool = True) -> list[tuple[tuple[int, ...], Fe]]:
    """(column set, minor value) for every factor of P(X), colex order."""
    k, n = G0.rows, G0.cols
    t = X.tower
    sets = nontrivial_array(n, k, 1)
    if not include_trivial:
        # |I| = k factors are det(G0_I) det(G0_J), constants in X
        sets = np.ascontiguousarray(sets[np.count_nonzero(sets < n, axis=1) < k])
    rows = np.arange(2 * k, dtype=np.intc).reshape(1, -1)
    vals = kernels.minor_dets(_window_one(G0, X), rows, sets, t.kernel_tables(Level.EXT))
    return [(tuple(int(c) for c in s), Fe(t, t.ext_code(v.tolist()), Level.EXT)) for s, v in zip(sets, vals)]


def minor_product_eval(G0: FieldMatrix, X: FieldMatrix, include_trivial: bool = True) -> Fe:
    """P(X): product of the non-trivial minors (|I| = k factors optional)."""
    t = X.tower
    acc = 1
    for _, v in minor_factors(G0, X, include_trivial):
        acc = t.emul(acc, v.value)
        if acc == 0:
            break
    return Fe(t, acc, Level.EXT)


def scale(X: FieldMatrix, c: Fe) -> FieldMatrix:
    t = X.tower
    return FieldMatrix(t, X.rows, X.cols, tuple(Fe(t, t.emul(e.value, c.value), Level.EXT) for e in X.entries))


def homogeneity_check(G0: FieldMatrix, X: FieldMatrix, t: Fe, include_trivial: bool = False) -> bool:
    """P(tX) == t^d(n,k) P(X) (constant |I| = k factors excluded unless asked)."""
    if not t:
        raise UsageError("scaling factor must be nonzero")
    lhs = minor_product_eval(G0, scale(X, t), include_trivial)
    rhs = t ** d_total(G0.cols, G0.rows) * minor_product_eval(G0, X, include_trivial)
    return lhs == rhs


def standard_form(G0: FieldMatrix) -> FieldMatrix:
    """Systematic form (I_k | A) of a matrix whose first k columns are independent."""
    k = G0.rows
    lead = submatrix(G0, range(k), range(k))
    if not det(lead):
        raise UsageError("leading k x k block is singular")
    # Gauss-Jordan on codes
    tower = G0.tower
    m = [row[:] for row in G0.codes()]
    for c in range(k):
        piv = next(r for r in range(c, k) if m[r][c])
        m[c], m[piv] = m[piv], m[c]
        inv = tower.einv(m[c][c])
        m[c] = [tower.emul(inv, v) for v in m[c]]
        for r in range(k):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [tower.esub(a, tower.emul(f, b)) for a, b in zip(m[r], m[c])]
    return FieldMatrix.from_codes(tower, G0.level, m)


def single_factor_witness(G0: FieldMatrix, I: tuple[int, ...], J: tuple[int, ...]) -> FieldMatrix:
    """An X making the single factor for columns I (block 1) and J (block 2) nonzero.

    Pick i rows S where (G0)_{S,I} is invertible; the other k - i rows get a 1
    in the first k - i X-columns named by J, everything else is zero.
    """
    k, n = G0.rows, G0.cols
    i, j = len(I), len(J)
    if i + j != 2 * k or i > k:
        raise UsageError("need |I| + |J| = 2k and |I| <= k")
    t = G0.tower
    Xcols = [c - n for c in J if c - n < n - k]
    if len(Xcols) < j - k:
        raise UsageError("J selects too few X columns")  # cannot happen for valid J
    S = next(
        rows for rows in colex_subsets(k, i)
        if det(submatrix(G0, rows, I))
    ) if i else ()
    R = [r for r in range(k) if r not in S]
    codes = [[0] * (n - k) for _ in range(k)]
    for r, c in zip(R, Xcols):
        codes[r][c] = 1
    return FieldMatrix.from_codes(t, Level.EXT, codes)


def factor_value(G0: FieldMatrix, X: FieldMatrix, cols: tuple[int, ...]) -> Fe:
    k = G0.rows
    t = X.tower
    v = kernels.minor_dets(
        _window_one(G0, X),
        np.arange(2 * k, dtype=np.intc).reshape(1, -1),
        np.array([cols], dtype=np.intc),
        t.kernel_tables(Level.EXT),
    )[0]
    return Fe(t, t.ext_code(v.tolist()), Level.EXT)


def individual_degree(G0: FieldMatrix, X: FieldMatrix, r: int, s: int) -> int:
    """Degree of P as a polynomial in the single entry X[r, s], others held fixed.

    The restriction has degree <= d(n, k), so d(n, k) + 1 evaluation points
    determine it.
    """
    t = X.tower
    D = d_total(G0.cols, G0.rows)
    if t.order < D + 1:
        raise UsageError(f"field of order {t.order} too small to interpolate degree {D}")
    xs = list(range(D + 1))
    ys = []
    for z in xs:
        entries = list(X.entries)
        entries[r * X.cols + s] = Fe(t, z, Level.EXT)
        ys.append(minor_product_eval(G0, FieldMatrix(t, X.rows, X.cols, tuple(entries))).value)
    return _newton_degree(t, xs, ys)
