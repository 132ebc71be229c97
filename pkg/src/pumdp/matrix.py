"""Dense exact linear algebra over one level of a field tower."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import UsageError
from .gf import Fe, FieldTower, Level


@dataclass(frozen=True)
class FieldMatrix:
    tower: FieldTower
    rows: int
    cols: int
    entries: tuple[Fe, ...]  # row-major

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise UsageError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")
        for e in self.entries:
            if e.tower is not self.tower and e.tower != self.tower:
                raise UsageError("matrix entries belong to different towers")

    @classmethod
    def from_rows(cls, tower: FieldTower, rows: Sequence[Sequence[Fe]]) -> FieldMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise UsageError("ragged rows")
        return cls(tower, r, c, tuple(e for row in rows for e in row))

    @classmethod
    def from_codes(cls, tower: FieldTower, level: Level, rows: Sequence[Sequence[int]]) -> FieldMatrix:
        return cls.from_rows(tower, [[tower.element(int(v), level) for v in row] for row in rows])

    @classmethod
    def zeros(cls, tower: FieldTower, rows: int, cols: int, level: Level = Level.EXT) -> FieldMatrix:
        z = tower.zero(level)
        return cls(tower, rows, cols, (z,) * (rows * cols))

    @classmethod
    def identity(cls, tower: FieldTower, n: int, level: Level = Level.EXT) -> FieldMatrix:
        z, o = tower.zero(level), tower.one(level)
        return cls(tower, n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    @property
    def level(self) -> Level:
        return Level.EXT if any(e.level is Level.EXT for e in self.entries) else Level.BASE

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fe:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fe]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def column(self, j: int) -> list[Fe]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_lists(self) -> list[list[Fe]]:
        return [self.row(i) for i in range(self.rows)]

    def codes(self) -> list[list[int]]:
        return [[e.value for e in self.row(i)] for i in range(self.rows)]

    def transpose(self) -> FieldMatrix:
        return FieldMatrix.from_rows(self.tower, [self.column(j) for j in range(self.cols)]) if self.rows else self

    def embed(self) -> FieldMatrix:
        return FieldMatrix(self.tower, self.rows, self.cols, tuple(e.embed() for e in self.entries))

    def nonzero_entries(self) -> list[tuple[int, int, Fe]]:
        return [(i, j, self[i, j]) for i in range(self.rows) for j in range(self.cols) if self[i, j]]

    def kernel_array(self, level: Level | None = None) -> np.ndarray:
        """(rows, cols, d') intc array of coefficient codes, d' = d at EXT, 1 at BASE."""
        level = level or self.level
        t = self.tower
        width = t.d if level is Level.EXT else 1
        if level is Level.BASE and any(not e.is_base for e in self.entries):
            raise UsageError("matrix has entries outside the base field")
        arr = np.zeros((self.rows, self.cols, width), dtype=np.intc)
        for idx, e in enumerate(self.entries):
            if e.value:
                arr[idx // self.cols, idx % self.cols] = t.kernel_vector(e.value, level) if width > 1 else [e.value]
        return arr

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        if self.cols != other.rows:
            raise UsageError("inner dimensions differ")
        t = self.tower
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = 0
                for l in range(self.cols):
                    acc = t.eadd(acc, t.emul(self[i, l].value, other[l, j].value))
                row.append(acc)
            out.append(row)
        lvl = Level.EXT if Level.EXT in (self.level, other.level) else Level.BASE
        return FieldMatrix.from_codes(t, lvl, out)

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.to_lists()]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


def hstack(*mats: FieldMatrix) -> FieldMatrix:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise UsageError("hstack needs equal row counts")
    return FieldMatrix.from_rows(mats[0].tower, [sum((m.row(i) for m in mats), []) for i in range(rows)])


def vstack(*mats: FieldMatrix) -> FieldMatrix:
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise UsageError("vstack needs equal column counts")
    return FieldMatrix.from_rows(mats[0].tower, [r for m in mats for r in m.to_lists()])


# ---------------------------------------------------------------------------


def colex_subsets(n: int, r: int, lower: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """r-subsets of range(n) in colexicographic order (largest element compared first).

    ``lower[p]`` optionally bounds from below the p-th smallest element.
    """
    lo = [0] * r
    for p in range(r):
        lo[p] = max(lower[p] if lower is not None else 0, p, lo[p - 1] + 1 if p else 0)

    def rec(p: int, upper: int) -> Iterator[tuple[int, ...]]:
        if p < 0:
            yield ()
            return
        for v in range(lo[p], upper):
            for prefix in rec(p - 1, v):
                yield prefix + (v,)

    if r == 0:
        yield ()
        return
    yield from rec(r - 1, n)


def det(M: FieldMatrix) -> Fe:
    if M.rows != M.cols:
        raise UsageError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    level = M.level
    t = M.tower
    coeffs = kernels.det(M.kernel_array(level), t.kernel_tables(level))
    value = t.ext_code(coeffs.tolist()) if level is Level.EXT else int(coeffs[0])
    return Fe(t, value, level)


def rank(M: FieldMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    level = M.level
    return kernels.rank(M.kernel_array(level), M.tower.kernel_tables(level))


def _check_indices(idx: Sequence[int], bound: int, what: str) -> tuple[int, ...]:
    idx = tuple(int(i) for i in idx)
    if any(not 0 <= i < bound for i in idx):
        raise UsageError(f"{what} index out of range [0, {bound})")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise UsageError(f"{what} indices must be strictly increasing")
    return idx


def submatrix(M: FieldMatrix, row_set: Sequence[int], col_set: Sequence[int]) -> FieldMatrix:
    rows = _check_indices(row_set, M.rows, "row")
    cols = _check_indices(col_set, M.cols, "column")
    return FieldMatrix.from_rows(M.tower, [[M[i, j] for j in cols] for i in rows]) if rows else FieldMatrix(
        M.tower, 0, len(cols), ()
    )


def mat_vec(u: Sequence[Fe], M: FieldMatrix) -> list[Fe]:
    """Row vector times matrix; every scalar product goes through ``fe_mul``."""
    if len(u) != M.rows:
        raise UsageError(f"vector of length {len(u)} against {M.rows} rows")
    level = Level.EXT if any(e.level is Level.EXT for e in u) or M.level is Level.EXT else Level.BASE
    out = []
    for j in range(M.cols):
        acc = M.tower.zero(level)
        for i in range(M.rows):
            acc = acc + u[i] * M[i, j]
        out.append(acc)
    return out


@dataclass(frozen=True)
class MinorCheck:
    """Outcome of a minor scan; truthy when no minor vanished."""

    ok: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None  # (rows, cols) of the first zero minor
    minors_checked: int
    zero_minors: int

    def __bool__(self) -> bool:
        return self.ok


def _scan(M: FieldMatrix, rowsets: list, colsets: list, full_scan: bool) -> tuple[int, int, int]:
    level = M.level
    return kernels.scan_minors(M.kernel_array(level), rowsets, colsets, M.tower.kernel_tables(level), full_scan)


def is_superregular(M: FieldMatrix, full_scan: bool = False) -> MinorCheck:
    """Every square minor of every order is nonzero.

    Orders ascend; within an order column sets run in colex order with row
    sets (also colex) innermost, and the first zero is the witness.
    """
    checked = zeros = 0
    witness = None
    for r in range(1, min(M.rows, M.cols) + 1):
        rowsets = list(colex_subsets(M.rows, r))
        colsets = list(colex_subsets(M.cols, r))
        first, z, c = _scan(M, rowsets, colsets, full_scan)
        checked += c
        zeros += z
        if first >= 0 and witness is None:
            witness = (rowsets[first % len(rowsets)], colsets[first // len(rowsets)])
            if not full_scan:
                break
    return MinorCheck(witness is None, witness, checked, zeros)


def is_mds_matrix(M: FieldMatrix, full_scan: bool = False) -> MinorCheck:
    """All k x k minors of a k x n matrix are nonzero."""
    k, n = M.rows, M.cols
    if k > n:
        raise UsageError(f"MDS check needs rows <= cols, got {k}x{n}")
    rows = tuple(range(k))
    colsets = list(colex_subsets(n, k))
    first, zeros, checked = _scan(M, [rows], colsets, full_scan)
    witness = (rows, colsets[first]) if first >= 0 else None
    return MinorCheck(first < 0, witness, checked, zeros)


def iter_minors(M: FieldMatrix, order: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    for cols in colex_subsets(M.cols, order):
        for rows in colex_subsets(M.rows, order):
            yield rows, cols
