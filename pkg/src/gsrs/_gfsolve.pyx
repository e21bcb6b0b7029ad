# cython: language_level=3
"""Compiled Gaussian-elimination kernel over GF(q).

Hot path of the decoder: nullspace extraction from the interpolation
system, cubic in the system size.  Mirrors ``_pysolve.nullspace``
exactly (same pivot order, same kernel-vector convention); the pure
module is the reference, this one is just fast.
"""

import numpy as np


cdef inline long long gf_add(long long a, long long b, long long p, int m) noexcept:
    cdef long long r, mult
    if m == 1:
        return (a + b) % p
    if p == 2:
        return a ^ b
    r = 0
    mult = 1
    while a or b:
        r += ((a + b) % p) * mult
        a //= p
        b //= p
        mult *= p
    return r


cdef inline long long gf_neg(long long a, long long p, int m) noexcept:
    cdef long long r, mult
    if m == 1:
        return (p - a) % p
    if p == 2:
        return a
    r = 0
    mult = 1
    while a:
        r += ((p - a % p) % p) * mult
        a //= p
        mult *= p
    return r


def nullspace(matrix, ctx):
    """Deterministic kernel vector and rank; same contract as _pysolve."""
    cdef long long[:, :] work = np.ascontiguousarray(matrix, dtype=np.int64).copy()
    cdef long long[:] exp = np.asarray(ctx.exp_table, dtype=np.int64)
    cdef long long[:] log = np.asarray(ctx.log_table, dtype=np.int64)
    cdef long long p = ctx.characteristic
    cdef int m = ctx.m
    cdef long long n = ctx.n

    cdef Py_ssize_t rows = work.shape[0]
    cdef Py_ssize_t cols = work.shape[1]
    cdef long long[:] pivot_row = np.empty(min(rows, cols) if rows and cols else 0, dtype=np.int64)
    cdef long long[:] pivot_col = np.empty(min(rows, cols) if rows and cols else 0, dtype=np.int64)

    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef Py_ssize_t npiv = 0
    cdef long long factor, f, tmp, la

    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if work[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = work[r, j]
                work[r, j] = work[piv, j]
                work[piv, j] = tmp
        factor = work[r, c]
        if factor != 1:
            # multiply row r by inv(factor)
            la = (n - log[factor]) % n
            for j in range(c, cols):
                if work[r, j] != 0:
                    work[r, j] = exp[(log[work[r, j]] + la) % n]
        for i in range(r + 1, rows):
            f = work[i, c]
            if f != 0:
                la = log[f]
                for j in range(c, cols):
                    if work[r, j] != 0:
                        # work[i,j] -= f * work[r,j]
                        tmp = exp[(la + log[work[r, j]]) % n]
                        work[i, j] = gf_add(work[i, j], gf_neg(tmp, p, m), p, m)
        pivot_row[npiv] = r
        pivot_col[npiv] = c
        npiv += 1
        r += 1

    cdef long long rank = npiv
    # first free column
    cdef Py_ssize_t free0 = -1
    cdef Py_ssize_t k = 0
    for c in range(cols):
        if k < npiv and pivot_col[k] == c:
            k += 1
        else:
            free0 = c
            break
    if free0 < 0:
        return None, int(rank)

    x_arr = np.zeros(cols, dtype=np.int64)
    cdef long long[:] x = x_arr
    x[free0] = 1
    cdef long long s
    cdef Py_ssize_t t
    for t in range(npiv - 1, -1, -1):
        i = pivot_row[t]
        c = pivot_col[t]
        s = 0
        for j in range(c + 1, cols):
            if work[i, j] != 0 and x[j] != 0:
                s = gf_add(s, exp[(log[work[i, j]] + log[x[j]]) % n], p, m)
        x[c] = gf_neg(s, p, m)
    return x_arr, int(rank)
