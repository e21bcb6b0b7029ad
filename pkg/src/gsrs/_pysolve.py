"""Pure-Python Gaussian elimination over GF(q).

Reference backend: always available, byte-for-byte the same results as
the compiled kernel in ``_gfsolve``.  The elimination order is part of
the contract — rows are consumed top to bottom, columns left to right,
and the reported kernel vector sets the first free column to 1 and all
later free columns to 0 — so solutions are reproducible across runs
and backends.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


def nullspace(matrix: np.ndarray, ctx: FieldCtx) -> tuple[np.ndarray | None, int]:
    """Deterministic kernel vector and rank of a matrix over GF(q).

    Returns ``(x, rank)`` where ``x`` is None when the kernel is trivial.
    """
    work = [[int(v) for v in row] for row in matrix]
    rows = len(work)
    cols = len(work[0]) if rows else matrix.shape[1]

    mul, sub, inv, neg, addf = ctx.mul, ctx.sub, ctx.inv, ctx.neg, ctx.add
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if work[i][c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        work[r], work[piv] = work[piv], work[r]
        factor = inv(work[r][c])
        if factor != 1:
            rowr = work[r]
            for j in range(c, cols):
                rowr[j] = mul(rowr[j], factor)
        rowr = work[r]
        for i in range(r + 1, rows):
            f = work[i][c]
            if f:
                rowi = work[i]
                for j in range(c, cols):
                    if rowr[j]:
                        rowi[j] = sub(rowi[j], mul(f, rowr[j]))
        pivots.append((r, c))
        r += 1

    rank = len(pivots)
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(cols) if c not in pivot_cols]
    if not free:
        return None, rank

    x = [0] * cols
    x[free[0]] = 1
    for rr, cc in reversed(pivots):
        s = 0
        rowr = work[rr]
        for j in range(cc + 1, cols):
            if rowr[j] and x[j]:
                s = addf(s, mul(rowr[j], x[j]))
        x[cc] = neg(s)
    return np.array(x, dtype=np.int64), rank
