"""DFT/IDFT pair over GF(q) of length n = q - 1, plus cyclic convolution.

Forward transform:  V_j = sum_i v_i * alpha^(j*i)
Inverse transform:  v_j = n^(-1) * sum_i V_i * alpha^(-j*i)

Normalization note: with these conventions the transform of a
componentwise product is n^(-1) times the cyclic convolution of the
transforms, i.e. dft(v .* w) = n^(-1) * cyclic_convolution(dft(v), dft(w)).

Transforms are direct O(n^2) sums; at n <= 255 there is nothing to gain
from an NTT and the direct sum doubles as its own specification.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx

TimeVector = list[int]
FreqVector = list[int]


def dft(ctx: FieldCtx, v: TimeVector) -> FreqVector:
    v = ctx.check_vector(v)
    n = ctx.n
    out = []
    for j in range(n):
        acc = 0
        for i, vi in enumerate(v):
            if vi:
                acc = ctx.add(acc, ctx.mul(vi, ctx.alpha_pow(j * i)))
        out.append(acc)
    return out


def idft(ctx: FieldCtx, big_v: FreqVector) -> TimeVector:
    big_v = ctx.check_vector(big_v)
    n = ctx.n
    n_inv = ctx.inv(ctx.from_int(n))
    out = []
    for j in range(n):
        acc = 0
        for i, vi in enumerate(big_v):
            if vi:
                acc = ctx.add(acc, ctx.mul(vi, ctx.alpha_pow(-j * i)))
        out.append(ctx.mul(n_inv, acc))
    return out


def cyclic_convolution(ctx: FieldCtx, big_v: FreqVector, big_w: FreqVector) -> FreqVector:
    """U_j = sum_i V_((j-i) mod n) * W_i, indices cyclic mod n."""
    big_v = ctx.check_vector(big_v)
    big_w = ctx.check_vector(big_w)
    n = ctx.n
    out = []
    for j in range(n):
        acc = 0
        for i, wi in enumerate(big_w):
            if wi:
                vv = big_v[(j - i) % n]
                if vv:
                    acc = ctx.add(acc, ctx.mul(vv, wi))
        out.append(acc)
    return out


def dft_matrix(ctx: FieldCtx) -> np.ndarray:
    """Column-convention forward matrix D with D[j, i] = alpha^(j*i), dft(v) = D @ v."""
    n = ctx.n
    out = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        for i in range(n):
            out[j, i] = ctx.alpha_pow(j * i)
    return out


def idft_matrix(ctx: FieldCtx) -> np.ndarray:
    """Inverse of :func:`dft_matrix`: E[j, i] = n^(-1) * alpha^(-j*i)."""
    n = ctx.n
    n_inv = ctx.inv(ctx.from_int(n))
    out = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        for i in range(n):
            out[j, i] = ctx.mul(n_inv, ctx.alpha_pow(-j * i))
    return out
