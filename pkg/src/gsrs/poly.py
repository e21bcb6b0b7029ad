"""Univariate polynomial arithmetic over GF(q).

Polynomials are lists of element codes in ascending order of degree,
kept trimmed: the zero polynomial is the empty list and a nonzero
polynomial never carries trailing zero coefficients.
"""

from __future__ import annotations

from .field import FieldCtx

Poly = list[int]


def trim(f) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: Poly) -> int:
    return len(f) - 1


def add(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = ctx.add(out[i], c)
    return trim(out)


def sub(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    return add(ctx, f, [ctx.neg(c) for c in g])


def scale(ctx: FieldCtx, c: int, f: Poly) -> Poly:
    if c == 0:
        return []
    return trim([ctx.mul(c, a) for a in f])


def mul(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return trim(out)


def pow_(ctx: FieldCtx, f: Poly, e: int) -> Poly:
    out: Poly = [1]
    for _ in range(e):
        out = mul(ctx, out, f)
    return out


def shift(f: Poly, e: int) -> Poly:
    """Multiply by x^e (e >= 0)."""
    if not f:
        return []
    return [0] * e + list(f)


def evaluate(ctx: FieldCtx, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def monic_from_roots(ctx: FieldCtx, roots) -> Poly:
    out: Poly = [1]
    for r in roots:
        out = mul(ctx, out, [ctx.neg(r), 1])
    return out


def x_multiplicity(f: Poly) -> int:
    """Largest e with x^e dividing f; 0 for the zero polynomial."""
    for i, c in enumerate(f):
        if c != 0:
            return i
    return 0


_binom_rows: dict[int, list[list[int]]] = {}


def binom_mod(n: int, k: int, characteristic: int) -> int:
    """Binomial coefficient C(n, k) reduced mod the characteristic.

    Built by Pascal's triangle mod p so small-characteristic cancellation
    (the reason Hasse derivatives exist) comes out exactly right.
    """
    if k < 0 or k > n:
        return 0
    rows = _binom_rows.setdefault(characteristic, [[1]])
    while len(rows) <= n:
        prev = rows[-1]
        row = [1] * (len(prev) + 1)
        for i in range(1, len(prev)):
            row[i] = (prev[i - 1] + prev[i]) % characteristic
        rows.append(row)
    return rows[n][k]
