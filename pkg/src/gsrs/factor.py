"""Factorization step: y-roots of Q(x, y) and the candidate codeword list.

``y_roots`` peels message-polynomial coefficients one at a time: strip the
x-content of Q, read candidate constant terms off the roots of Q(0, y),
substitute y -> x*y + gamma and recurse.  Each surviving leaf is re-checked
by full substitution, so a spurious partial root can never leak out.

A y-root F maps to the codeword (F(alpha^(-0)), ..., F(alpha^(-(n-1)))),
whose spectrum is the message n * F padded with zeros.  (The scalar n
matters in odd characteristic: the inverse transform carries a 1/n that
evaluation does not.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import poly
from .code import RSParams, encode, hamming_distance
from .errors import ParameterError
from .field import FieldCtx
from .interp import BivariatePoly
from .poly import binom_mod


def substitute_check(ctx: FieldCtx, q: BivariatePoly, f: list[int]) -> bool:
    """True iff Q(x, F(x)) is the zero polynomial (Horner in y)."""
    acc: list[int] = []
    for stripe in reversed(q.qpolys):
        acc = poly.add(ctx, poly.mul(ctx, acc, f), stripe)
    return not acc


def _strip_x_content(ctx: FieldCtx, qpolys: list[list[int]]) -> list[list[int]]:
    shift = min(poly.x_multiplicity(s) for s in qpolys if s)
    if shift == 0:
        return qpolys
    return [s[shift:] if s else [] for s in qpolys]


def _shift_y(ctx: FieldCtx, qpolys: list[list[int]], gamma: int) -> list[list[int]]:
    """Substitute y -> x*y + gamma: new Q_b = x^b * sum_{nu>=b} C(nu,b) gamma^(nu-b) Q_nu."""
    p = ctx.characteristic
    out: list[list[int]] = []
    for b in range(len(qpolys)):
        acc: list[int] = []
        for nu in range(b, len(qpolys)):
            c = binom_mod(nu, b, p)
            if c == 0 or not qpolys[nu]:
                continue
            w = ctx.mul(ctx.from_int(c), ctx.pow(gamma, nu - b))
            if w:
                acc = poly.add(ctx, acc, poly.scale(ctx, w, qpolys[nu]))
        out.append(poly.shift(acc, b))
    return out


def y_roots(ctx: FieldCtx, q: BivariatePoly, k: int) -> list[list[int]]:
    """All F(x) with deg F < k and Q(x, F(x)) identically zero.

    Results are trimmed coefficient lists, sorted lexicographically by
    padded coefficients; at most deg_y Q of them exist.
    """
    if q.is_zero():
        raise ParameterError("cannot factor the zero polynomial")
    found: list[tuple[int, ...]] = []

    def recurse(qpolys: list[list[int]], depth: int, prefix: list[int]):
        qpolys = _strip_x_content(ctx, qpolys)
        if depth == k:
            if not qpolys[0]:
                found.append(tuple(prefix))
            return
        # candidate next coefficients: roots of the univariate Q(0, y)
        ypoly = poly.trim([s[0] if s else 0 for s in qpolys])
        for gamma in ctx.elements():
            if poly.evaluate(ctx, ypoly, gamma) == 0:
                recurse(_shift_y(ctx, qpolys, gamma), depth + 1, prefix + [gamma])

    recurse([list(s) for s in q.qpolys], 0, [])

    roots = []
    for prefix in sorted(set(found)):
        f = poly.trim(list(prefix))
        if substitute_check(ctx, q, f) and f not in roots:
            roots.append(f)
    return roots


@dataclass(frozen=True)
class Candidate:
    message: tuple[int, ...]
    codeword: tuple[int, ...]
    distance: int

    def as_dict(self) -> dict:
        return {"message": list(self.message), "codeword": list(self.codeword), "distance": self.distance}


def _sorted_list(entries) -> list[Candidate]:
    return sorted(entries, key=lambda c: (c.distance, c.message))


def candidates(ctx: FieldCtx, roots: list[list[int]], code: RSParams,
               reference: list[int], tau: int) -> list[Candidate]:
    """Map y-roots to codewords and keep those within distance tau of reference.

    Codeword = pointwise evaluation of F at the alpha^(-j); message = the
    codeword's first k spectrum entries, which is n * F zero-padded to k.
    """
    n_elem = ctx.from_int(code.n)
    out = []
    seen = set()
    for f in roots:
        if poly.deg(f) >= code.k:
            raise ParameterError(f"root of degree {poly.deg(f)} >= k = {code.k}")
        cw = tuple(poly.evaluate(ctx, f, ctx.alpha_pow(-j)) for j in range(code.n))
        if cw in seen:
            continue
        seen.add(cw)
        dist = hamming_distance(cw, reference)
        if dist <= tau:
            padded = list(f) + [0] * (code.k - len(f))
            msg = tuple(ctx.mul(n_elem, c) for c in padded)
            out.append(Candidate(message=msg, codeword=cw, distance=dist))
    return _sorted_list(out)


def brute_force_list(code: RSParams, reference: list[int], tau: int) -> list[Candidate]:
    """Oracle: enumerate all q^k messages and keep codewords within distance tau."""
    ctx = code.ctx
    if ctx.q**code.k > 1 << 20:
        raise ParameterError("brute force limited to q^k <= 2^20")
    out = []
    for msg in itertools.product(range(ctx.q), repeat=code.k):
        cw = encode(list(msg), code)
        dist = hamming_distance(cw, reference)
        if dist <= tau:
            out.append(Candidate(message=msg, codeword=tuple(cw), distance=dist))
    return _sorted_list(out)
