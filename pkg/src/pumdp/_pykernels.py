"""Pure-Python twin of ``_ckernels``: same signatures, same algorithms.

Used when the compiled module is unavailable or when ``PUMDP_PURE_PYTHON=1``.
Entries are handled as tuples of d base codes.
"""

from __future__ import annotations

import numpy as np


class _Ctx:
    __slots__ = ("q", "d", "add", "sub", "mul", "inv", "mod", "zero", "one")

    def __init__(self, add, sub, mul, inv, modulus):
        self.q = add.shape[0]
        self.d = len(modulus) - 1
        if self.d < 1:
            raise ValueError("extension degree must be >= 1")
        self.add = add.tolist()
        self.sub = sub.tolist()
        self.mul = mul.tolist()
        self.inv = inv.tolist()
        self.mod = [int(c) for c in modulus]
        self.zero = (0,) * self.d
        self.one = (1,) + (0,) * (self.d - 1)

    def emul(self, a, b):
        d = self.d
        if d == 1:
            return (self.mul[a[0]][b[0]],)
        add, mul, sub = self.add, self.mul, self.sub
        tmp = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        tmp[i + j] = add[tmp[i + j]][row[y]]
        mod = self.mod
        for t in range(2 * d - 2, d - 1, -1):
            c = tmp[t]
            if c:
                row = mul[c]
                for s in range(d):
                    tmp[t - d + s] = sub[tmp[t - d + s]][row[mod[s]]]
        return tuple(tmp[:d])

    def esub(self, a, b):
        sub = self.sub
        return tuple(sub[x][y] for x, y in zip(a, b))

    def einv(self, a):
        d = self.d
        if d == 1:
            return (self.inv[a[0]],)
        mul, sub, inv = self.mul, self.sub, self.inv
        r0, r1 = list(self.mod), list(a) + [0]
        s0, s1 = [0] * (d + 1), [1] + [0] * d
        dr0, dr1 = d, _deg(r1, d)
        while dr1 > 0:
            linv = inv[r1[dr1]]
            while dr0 >= dr1:
                c = mul[r0[dr0]][linv]
                sh = dr0 - dr1
                row = mul[c]
                for i in range(dr1 + 1):
                    r0[i + sh] = sub[r0[i + sh]][row[r1[i]]]
                for i in range(d + 1 - sh):
                    s0[i + sh] = sub[s0[i + sh]][row[s1[i]]]
                dr0 = _deg(r0, dr0)
            r0, r1, s0, s1, dr0, dr1 = r1, r0, s1, s0, dr1, dr0
        row = mul[inv[r1[0]]]
        return tuple(row[s1[i]] for i in range(d))


def _deg(a, n):
    while n >= 0 and a[n] == 0:
        n -= 1
    return n


def _det_core(F: _Ctx, m: list[list[tuple]], want_det: bool):
    N = len(m)
    zero = F.zero
    det = F.one
    flip = False
    for c in range(N):
        piv = -1
        for r in range(c, N):
            if m[r][c] != zero:
                piv = r
                break
        if piv < 0:
            return False, zero
        if piv != c:
            m[piv], m[c] = m[c], m[piv]
            flip = not flip
        pc = m[c][c]
        if want_det:
            det = F.emul(det, pc)
        if c == N - 1:
            break
        pinv = F.einv(pc)
        prow = m[c]
        for r in range(c + 1, N):
            row = m[r]
            if row[c] == zero:
                continue
            fac = F.emul(row[c], pinv)
            for cc in range(c + 1, N):
                src = prow[cc]
                if src != zero:
                    row[cc] = F.esub(row[cc], F.emul(fac, src))
    if want_det and flip:
        det = F.esub(zero, det)
    return True, det


def _rows(a: np.ndarray) -> list[list[tuple]]:
    return [[tuple(e) for e in row] for row in a.tolist()]


def det(a, add, sub, mul, inv, modulus):
    F = _Ctx(add, sub, mul, inv, modulus)
    a = np.asarray(a)
    if a.ndim != 3 or a.shape[0] != a.shape[1] or a.shape[2] != F.d:
        raise ValueError("det needs an (N, N, d) array")
    if a.shape[0] == 0:
        return np.array(F.one, dtype=np.intc)
    _, value = _det_core(F, _rows(a), True)
    return np.array(value, dtype=np.intc)


def rank(a, add, sub, mul, inv, modulus):
    F = _Ctx(add, sub, mul, inv, modulus)
    a = np.asarray(a)
    if a.ndim != 3 or a.shape[2] != F.d:
        raise ValueError("rank needs an (R, C, d) array")
    m = _rows(a)
    R, C = a.shape[0], a.shape[1]
    zero = F.zero
    rk = 0
    for c in range(C):
        if rk == R:
            break
        piv = next((r for r in range(rk, R) if m[r][c] != zero), -1)
        if piv < 0:
            continue
        m[piv], m[rk] = m[rk], m[piv]
        pinv = F.einv(m[rk][c])
        prow = m[rk]
        for r in range(rk + 1, R):
            row = m[r]
            if row[c] == zero:
                continue
            fac = F.emul(row[c], pinv)
            for cc in range(c + 1, C):
                if prow[cc] != zero:
                    row[cc] = F.esub(row[cc], F.emul(fac, prow[cc]))
        rk += 1
    return rk


def _check(a, rowsets, colsets, F):
    a = np.asarray(a)
    if a.ndim != 3 or a.shape[2] != F.d or np.shape(rowsets)[1] != np.shape(colsets)[1]:
        raise ValueError("shape mismatch between matrix and index sets")
    return _rows(a)


def scan_minors(a, rowsets, colsets, full_scan, add, sub, mul, inv, modulus):
    F = _Ctx(add, sub, mul, inv, modulus)
    m = _check(a, rowsets, colsets, F)
    rowsets = np.asarray(rowsets).tolist()
    colsets = np.asarray(colsets).tolist()
    SR = len(rowsets)
    first, zeros, checked = -1, 0, 0
    if not rowsets or not colsets or not colsets[0]:
        return -1, 0, 0
    for ci, cols in enumerate(colsets):
        for ri, rows in enumerate(rowsets):
            sub_m = [[m[i][j] for j in cols] for i in rows]
            checked += 1
            nonzero, _ = _det_core(F, sub_m, False)
            if not nonzero:
                zeros += 1
                if first < 0:
                    first = ci * SR + ri
                if not full_scan:
                    return first, zeros, checked
    return first, zeros, checked


def minor_dets(a, rowsets, colsets, add, sub, mul, inv, modulus):
    F = _Ctx(add, sub, mul, inv, modulus)
    m = _check(a, rowsets, colsets, F)
    rowsets = np.asarray(rowsets).tolist()
    colsets = np.asarray(colsets).tolist()
    out = np.zeros((len(colsets) * len(rowsets), F.d), dtype=np.intc)
    k = 0
    for cols in colsets:
        for rows in rowsets:
            if cols:
                _, value = _det_core(F, [[m[i][j] for j in cols] for i in rows], True)
            else:
                value = F.one
            out[k] = value
            k += 1
    return out
