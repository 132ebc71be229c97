"""Partial unit-memory codes G(z) = G0 + G1 z built from a Cauchy G0.

G1 = (X | 0) where X carries alpha, alpha^2, ..., alpha^(n-k) on its leading
diagonal and nothing else, so G1 has exactly n - k nonzero entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .errors import CapacityError, FieldError, ParameterError, UsageError
from .gf import Fe, FieldTower, Level, enumerate_elements, prime_power_split, smallest_prime_power_at_least, tower_for_q
from .matrix import FieldMatrix, colex_subsets, hstack


@dataclass(frozen=True)
class CauchySpec:
    alphas: tuple[Fe, ...]  # column points, n of them
    betas: tuple[Fe, ...]  # row points, k of them

    def __post_init__(self) -> None:
        pts = list(self.betas) + list(self.alphas)
        seen: dict[int, int] = {}
        for i, x in enumerate(pts):
            if x.value in seen:
                a, b = seen[x.value], i
                raise FieldError(f"Cauchy points {_point_name(a, len(self.betas))} and "
                                 f"{_point_name(b, len(self.betas))} coincide (value {x})")
            seen[x.value] = i


def _point_name(i: int, k: int) -> str:
    return f"beta[{i}]" if i < k else f"alpha[{i - k}]"


@dataclass(frozen=True)
class ConvCode:
    """Generator G(z) = G0 + G1 z of an (n, k, delta) code over ``tower``."""

    tower: FieldTower
    n: int
    k: int
    delta: int
    G0: FieldMatrix
    G1: FieldMatrix
    alpha: Fe | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.n:
            raise ParameterError(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        for name, M in (("G0", self.G0), ("G1", self.G1)):
            if M.shape != (self.k, self.n):
                raise UsageError(f"{name} is {M.rows}x{M.cols}, expected {self.k}x{self.n}")
            if M.tower != self.tower:
                raise UsageError(f"{name} lives in a different tower")
        if self.delta < 0:
            raise ParameterError("delta must be nonnegative")

    @property
    def L(self) -> int:
        return self.delta // self.k + self.delta // (self.n - self.k)


@dataclass(frozen=True)
class SlidingMatrix:
    j: int
    body: FieldMatrix


def cauchy_matrix(spec: CauchySpec) -> FieldMatrix:
    """k x n matrix with entry (i, j) = 1 / (alpha_j - beta_i)."""
    if not spec.alphas or not spec.betas:
        raise UsageError("Cauchy matrix needs at least one row and one column point")
    t = spec.alphas[0].tower
    rows = [[(a - b).inverse() for a in spec.alphas] for b in spec.betas]
    return FieldMatrix.from_rows(t, rows)


def build_X(k: int, n_minus_k: int, alpha: Fe) -> FieldMatrix:
    """k x (n-k) matrix with alpha^i at (i, i) for i = 1..n-k (1-based) and zeros elsewhere."""
    if n_minus_k < 1:
        raise ParameterError("n - k must be >= 1")
    if k < n_minus_k:
        raise ParameterError(f"X needs k >= n - k, got k={k}, n-k={n_minus_k}")
    if not alpha:
        raise ParameterError("alpha must be nonzero")
    t = alpha.tower
    zero = t.zero(Level.EXT)
    rows = [[zero] * n_minus_k for _ in range(k)]
    power = alpha.embed()
    for i in range(n_minus_k):
        rows[i][i] = power
        power = Fe(t, t.emul(power.value, alpha.value), Level.EXT)
    return FieldMatrix.from_rows(t, rows)


def guaranteed_degree(delta: int) -> int:
    """Extension degree ceil((delta^2 - 1) / 4) + 1 that guarantees the MDP property."""
    return -(-(delta * delta - 1) // 4) + 1


def default_q(n: int, k: int) -> int:
    return smallest_prime_power_at_least(n + k)


def primitive_element(tower: FieldTower) -> Fe:
    """Smallest (canonical order) generator of the multiplicative group of F_q."""
    q = tower.q
    order = q - 1
    primes = [r for r in range(2, order + 1) if order % r == 0 and prime_power_split(r) == (r, 1)]
    for a in range(1, q):
        if all(tower.epow(a, order // r) != 1 for r in primes):
            return Fe(tower, a, Level.BASE)
    raise FieldError("no primitive element found")  # pragma: no cover


def _check_family(n: int, k: int) -> None:
    if not (k > n - k >= 1):
        raise ParameterError(f"the construction needs k > n - k >= 1, got n={n}, k={k}")


def _cauchy_points(tower: FieldTower, n: int, k: int, override) -> CauchySpec:
    if override is not None:
        betas, alphas = override
        as_fe = lambda v: v if isinstance(v, Fe) else tower.element(int(v), Level.BASE)  # noqa: E731
        betas, alphas = tuple(map(as_fe, betas)), tuple(map(as_fe, alphas))
        if len(betas) != k or len(alphas) != n:
            raise UsageError(f"Cauchy override needs {k} betas and {n} alphas")
        return CauchySpec(alphas, betas)
    pts = enumerate_elements(tower, Level.BASE, n + k)
    return CauchySpec(tuple(pts[k:]), tuple(pts[:k]))


def _assemble(tower: FieldTower, n: int, k: int, cauchy_points, alpha: Fe | None) -> ConvCode:
    G0 = cauchy_matrix(_cauchy_points(tower, n, k, cauchy_points))
    if alpha is None:
        alpha = tower.generator() if tower.d > 1 else primitive_element(tower)
    X = build_X(k, n - k, alpha)
    G1 = hstack(X, FieldMatrix.zeros(tower, k, k, Level.EXT))
    return ConvCode(tower, n, k, n - k, G0, G1, alpha.embed())


def cauchy_construct(
    n: int,
    k: int,
    *,
    q: int | None = None,
    d: int | None = None,
    f: Sequence[int] | None = None,
    cauchy_points: tuple[Sequence, Sequence] | None = None,
    alpha: int | None = None,
    seed: int | np.random.SeedSequence | None = 0,
) -> ConvCode:
    """The (n, k, n-k) code with Cauchy G0 and G1 = (X | 0).

    Defaults: q is the smallest prime power >= n + k, d is
    ``guaranteed_degree(n - k)``, the Cauchy points are the first n + k base
    elements (betas first), and alpha is the residue class of y (or the
    smallest primitive element of F_q when d == 1).  f is seeded-random unless
    given; ``alpha`` overrides by element code.
    """
    _check_family(n, k)
    q = default_q(n, k) if q is None else q
    if q < n + k and cauchy_points is None:
        raise CapacityError(f"q={q} has fewer than n + k = {n + k} distinct Cauchy points")
    d = guaranteed_degree(n - k) if d is None else d
    tower = tower_for_q(q, d, f_override=f, seed=seed)
    a = None
    if alpha is not None:
        a = tower.element(alpha, Level.EXT)
    return _assemble(tower, n, k, cauchy_points, a)


def fixed_degree_construct(
    n: int,
    k: int,
    d: int,
    seed: int | np.random.SeedSequence | None = 0,
    q: int | None = None,
) -> ConvCode:
    """Same family with the extension degree forced to ``d`` (no MDP guarantee)."""
    _check_family(n, k)
    if d < 1:
        raise ParameterError("d must be >= 1")
    return cauchy_construct(n, k, q=q, d=d, seed=seed)


def sliding_matrix(code: ConvCode, j: int) -> SlidingMatrix:
    """Block upper-triangular (j+1)k x (j+1)n matrix with G0 on the diagonal and G1 above it."""
    if j < 0:
        raise UsageError("window index j must be >= 0")
    t, k, n = code.tower, code.k, code.n
    zero = t.zero(Level.EXT)
    blocks = {0: code.G0.embed(), 1: code.G1.embed()}
    rows = []
    for br in range(j + 1):
        for i in range(k):
            row = []
            for bc in range(j + 1):
                B = blocks.get(bc - br)
                row.extend(B.row(i) if B is not None else [zero] * n)
            rows.append(row)
    return SlidingMatrix(j, FieldMatrix.from_rows(t, rows))


def _newton_degree(tower: FieldTower, xs: list[int], ys: list[int]) -> int:
    """Degree of the interpolating polynomial (-1 for the zero polynomial)."""
    coef = list(ys)
    N = len(xs)
    for j in range(1, N):
        for i in range(N - 1, j - 1, -1):
            num = tower.esub(coef[i], coef[i - 1])
            coef[i] = tower.emul(num, tower.einv(tower.esub(xs[i], xs[i - j])))
    deg = -1
    for i, c in enumerate(coef):
        if c:
            deg = i
    return deg


def compute_degree(code: ConvCode) -> int:
    """Maximum z-degree over all k x k minors of G0 + G1 z.

    Each minor has degree <= k, so it is recovered from its values at k + 1
    distinct points of F_{q^d} by Newton interpolation.
    """
    t, k, n = code.tower, code.k, code.n
    if t.order < k + 1:
        raise CapacityError(f"F_{t.order} has fewer than k + 1 = {k + 1} interpolation points")
    xs = list(range(k + 1))
    tables = t.kernel_tables(Level.EXT)
    g0, g1 = code.G0.codes(), code.G1.codes()
    best = -1
    for cols in colex_subsets(n, k):
        ys = []
        for z in xs:
            arr = np.zeros((k, k, t.d), dtype=np.intc)
            for i in range(k):
                for jj, c in enumerate(cols):
                    v = t.eadd(g0[i][c], t.emul(z, g1[i][c]))
                    arr[i, jj] = t.kernel_vector(v, Level.EXT)
            ys.append(t.ext_code(kernels.det(arr, tables).tolist()))
        best = max(best, _newton_degree(t, xs, ys))
    if best < 0:
        raise ParameterError("G(z) does not have full row rank")
    return best
