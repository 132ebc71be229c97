# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled elimination kernels over F_q[y]/(f).

Matrices arrive as C-contiguous ``intc`` arrays of shape (rows, cols, d): each
entry is its d coefficients over F_q, each coefficient a base-field code.  The
base field is described by q*q add/sub/mul tables and an inverse table.
"""

import numpy as np
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef enum:
    MAXD = 16


cdef struct Ctx:
    int q
    int d
    const int* add
    const int* sub
    const int* mul
    const int* inv
    const int* mod


cdef inline bint ez(const int* a, int d) noexcept nogil:
    cdef int i
    for i in range(d):
        if a[i] != 0:
            return False
    return True


cdef inline void emul(const Ctx* F, const int* a, const int* b, int* out) noexcept nogil:
    cdef int tmp[2 * MAXD]
    cdef int d = F.d, q = F.q
    cdef int i, j, t, s, c, ai
    cdef const int* row
    if d == 1:
        out[0] = F.mul[a[0] * q + b[0]]
        return
    for i in range(2 * d - 1):
        tmp[i] = 0
    for i in range(d):
        ai = a[i]
        if ai == 0:
            continue
        row = F.mul + ai * q
        for j in range(d):
            if b[j] != 0:
                tmp[i + j] = F.add[tmp[i + j] * q + row[b[j]]]
    for t in range(2 * d - 2, d - 1, -1):
        c = tmp[t]
        if c == 0:
            continue
        row = F.mul + c * q
        for s in range(d):
            tmp[t - d + s] = F.sub[tmp[t - d + s] * q + row[F.mod[s]]]
    for i in range(d):
        out[i] = tmp[i]


cdef inline int pdeg(const int* a, int n) noexcept nogil:
    while n >= 0 and a[n] == 0:
        n -= 1
    return n


cdef void einv(const Ctx* F, const int* a, int* out) noexcept nogil:
    # extended Euclid on (f, a); s tracks the cofactor of a
    cdef int d = F.d, q = F.q
    cdef int ra[MAXD + 1]
    cdef int rb[MAXD + 1]
    cdef int sa[MAXD + 1]
    cdef int sb[MAXD + 1]
    cdef int* r0 = ra
    cdef int* r1 = rb
    cdef int* s0 = sa
    cdef int* s1 = sb
    cdef int* tp
    cdef int i, sh, c, linv, dr0, dr1
    cdef const int* row
    if d == 1:
        out[0] = F.inv[a[0]]
        return
    for i in range(d + 1):
        r0[i] = F.mod[i]
        r1[i] = a[i] if i < d else 0
        s0[i] = 0
        s1[i] = 0
    s1[0] = 1
    dr0 = d
    dr1 = pdeg(r1, d)
    while dr1 > 0:
        linv = F.inv[r1[dr1]]
        while dr0 >= dr1:
            c = F.mul[r0[dr0] * q + linv]
            sh = dr0 - dr1
            row = F.mul + c * q
            for i in range(dr1 + 1):
                r0[i + sh] = F.sub[r0[i + sh] * q + row[r1[i]]]
            for i in range(d + 1 - sh):
                s0[i + sh] = F.sub[s0[i + sh] * q + row[s1[i]]]
            dr0 = pdeg(r0, dr0)
        tp = r0; r0 = r1; r1 = tp
        tp = s0; s0 = s1; s1 = tp
        i = dr0; dr0 = dr1; dr1 = i
    c = F.inv[r1[0]]
    row = F.mul + c * q
    for i in range(d):
        out[i] = row[s1[i]]


cdef bint det_core(const Ctx* F, int* m, int N, int* det) noexcept nogil:
    """Gaussian elimination in place; returns det != 0 and fills ``det`` if given."""
    cdef int d = F.d, q = F.q
    cdef int c, r, cc, i, piv
    cdef bint flip = False
    cdef int fac[MAXD]
    cdef int pinv[MAXD]
    cdef int t[MAXD]
    cdef int* pc
    cdef int* rc
    cdef int* src
    cdef int* dst
    if det != NULL:
        det[0] = 1
        for i in range(1, d):
            det[i] = 0
    for c in range(N):
        piv = -1
        for r in range(c, N):
            if not ez(m + (r * N + c) * d, d):
                piv = r
                break
        if piv < 0:
            if det != NULL:
                for i in range(d):
                    det[i] = 0
            return False
        if piv != c:
            for cc in range(c, N):
                src = m + (piv * N + cc) * d
                dst = m + (c * N + cc) * d
                for i in range(d):
                    t[0] = src[i]
                    src[i] = dst[i]
                    dst[i] = t[0]
            flip = not flip
        pc = m + (c * N + c) * d
        if det != NULL:
            emul(F, det, pc, det)
        if c == N - 1:
            break
        einv(F, pc, pinv)
        for r in range(c + 1, N):
            rc = m + (r * N + c) * d
            if ez(rc, d):
                continue
            emul(F, rc, pinv, fac)
            for cc in range(c + 1, N):
                src = m + (c * N + cc) * d
                if ez(src, d):
                    continue
                emul(F, fac, src, t)
                dst = m + (r * N + cc) * d
                for i in range(d):
                    dst[i] = F.sub[dst[i] * q + t[i]]
    if det != NULL and flip:
        for i in range(d):
            det[i] = F.sub[det[i]]  # 0 - x: row 0 of the table
    return True


cdef int rank_core(const Ctx* F, int* m, int R, int C) noexcept nogil:
    cdef int d = F.d, q = F.q
    cdef int rk = 0, c, r, cc, i, piv, tmpv
    cdef int fac[MAXD]
    cdef int pinv[MAXD]
    cdef int t[MAXD]
    cdef int* src
    cdef int* dst
    cdef int* rc
    for c in range(C):
        if rk == R:
            break
        piv = -1
        for r in range(rk, R):
            if not ez(m + (r * C + c) * d, d):
                piv = r
                break
        if piv < 0:
            continue
        if piv != rk:
            for cc in range(c, C):
                src = m + (piv * C + cc) * d
                dst = m + (rk * C + cc) * d
                for i in range(d):
                    tmpv = src[i]
                    src[i] = dst[i]
                    dst[i] = tmpv
        einv(F, m + (rk * C + c) * d, pinv)
        for r in range(rk + 1, R):
            rc = m + (r * C + c) * d
            if ez(rc, d):
                continue
            emul(F, rc, pinv, fac)
            for cc in range(c + 1, C):
                src = m + (rk * C + cc) * d
                if ez(src, d):
                    continue
                emul(F, fac, src, t)
                dst = m + (r * C + cc) * d
                for i in range(d):
                    dst[i] = F.sub[dst[i] * q + t[i]]
        rk += 1
    return rk


cdef Ctx make_ctx(const int[:, ::1] add, const int[:, ::1] sub, const int[:, ::1] mul,
                  const int[::1] inv, const int[::1] modulus):
    cdef Ctx F
    F.q = add.shape[0]
    F.d = modulus.shape[0] - 1
    if F.d < 1 or F.d > MAXD:
        raise ValueError(f"extension degree {F.d} outside [1, {MAXD}]")
    F.add = &add[0, 0]
    F.sub = &sub[0, 0]
    F.mul = &mul[0, 0]
    F.inv = &inv[0]
    F.mod = &modulus[0]
    return F


def det(const int[:, :, ::1] a, const int[:, ::1] add, const int[:, ::1] sub,
        const int[:, ::1] mul, const int[::1] inv, const int[::1] modulus):
    cdef Ctx F = make_ctx(add, sub, mul, inv, modulus)
    cdef int N = a.shape[0]
    if a.shape[1] != N or a.shape[2] != F.d:
        raise ValueError("det needs an (N, N, d) array")
    out = np.zeros(F.d, dtype=np.intc)
    cdef int[::1] o = out
    if N == 0:
        o[0] = 1
        return out
    cdef int* buf = <int*> malloc(N * N * F.d * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        memcpy(buf, &a[0, 0, 0], N * N * F.d * sizeof(int))
        with nogil:
            det_core(&F, buf, N, &o[0])
    finally:
        free(buf)
    return out


def rank(const int[:, :, ::1] a, const int[:, ::1] add, const int[:, ::1] sub,
         const int[:, ::1] mul, const int[::1] inv, const int[::1] modulus):
    cdef Ctx F = make_ctx(add, sub, mul, inv, modulus)
    cdef int R = a.shape[0], C = a.shape[1], rk
    if a.shape[2] != F.d:
        raise ValueError("rank needs an (R, C, d) array")
    if R == 0 or C == 0:
        return 0
    cdef int* buf = <int*> malloc(R * C * F.d * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        memcpy(buf, &a[0, 0, 0], R * C * F.d * sizeof(int))
        with nogil:
            rk = rank_core(&F, buf, R, C)
    finally:
        free(buf)
    return rk


cdef inline void gather(const int* src, int C, int d, const int* rows, const int* cols,
                        int r, int* dst) noexcept nogil:
    cdef int i, j
    for i in range(r):
        for j in range(r):
            memcpy(dst + (i * r + j) * d, src + (rows[i] * C + cols[j]) * d, d * sizeof(int))


def scan_minors(const int[:, :, ::1] a, const int[:, ::1] rowsets, const int[:, ::1] colsets,
                bint full_scan, const int[:, ::1] add, const int[:, ::1] sub,
                const int[:, ::1] mul, const int[::1] inv, const int[::1] modulus):
    """Test every (colset, rowset) minor for vanishing, column sets outermost.

    Returns ``(first_zero, zeros, checked)`` with ``first_zero`` the flat index
    ``ci * len(rowsets) + ri`` of the first vanishing minor or -1.
    """
    cdef Ctx F = make_ctx(add, sub, mul, inv, modulus)
    cdef int C = a.shape[1], d = F.d
    cdef Py_ssize_t SR = rowsets.shape[0], SC = colsets.shape[0]
    cdef int r = colsets.shape[1]
    cdef Py_ssize_t ci, ri, first = -1, zeros = 0, checked = 0
    if a.shape[2] != d or rowsets.shape[1] != r:
        raise ValueError("shape mismatch between matrix and index sets")
    if SR == 0 or SC == 0 or r == 0:
        return -1, 0, 0
    cdef int* buf = <int*> malloc(r * r * d * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef const int* src = &a[0, 0, 0]
    try:
        with nogil:
            for ci in range(SC):
                for ri in range(SR):
                    gather(src, C, d, &rowsets[ri, 0], &colsets[ci, 0], r, buf)
                    checked += 1
                    if not det_core(&F, buf, r, NULL):
                        zeros += 1
                        if first < 0:
                            first = ci * SR + ri
                        if not full_scan:
                            break
                if first >= 0 and not full_scan:
                    break
    finally:
        free(buf)
    return first, zeros, checked


def minor_dets(const int[:, :, ::1] a, const int[:, ::1] rowsets, const int[:, ::1] colsets,
               const int[:, ::1] add, const int[:, ::1] sub, const int[:, ::1] mul,
               const int[::1] inv, const int[::1] modulus):
    """Determinant of every (colset, rowset) minor, shape (SC * SR, d)."""
    cdef Ctx F = make_ctx(add, sub, mul, inv, modulus)
    cdef int C = a.shape[1], d = F.d
    cdef Py_ssize_t SR = rowsets.shape[0], SC = colsets.shape[0]
    cdef int r = colsets.shape[1]
    cdef Py_ssize_t ci, ri
    if a.shape[2] != d or rowsets.shape[1] != r:
        raise ValueError("shape mismatch between matrix and index sets")
    out = np.zeros((SC * SR, d), dtype=np.intc)
    cdef int[:, ::1] o = out
    if SR == 0 or SC == 0:
        return out
    if r == 0:
        o[:, 0] = 1
        return out
    cdef int* buf = <int*> malloc(r * r * d * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef const int* src = &a[0, 0, 0]
    try:
        with nogil:
            for ci in range(SC):
                for ri in range(SR):
                    gather(src, C, d, &rowsets[ri, 0], &colsets[ci, 0], r, buf)
                    det_core(&F, buf, r, &o[ci * SR + ri, 0])
    finally:
        free(buf)
    return out
