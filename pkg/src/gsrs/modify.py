"""Received-vector modification: re-encoding map and periodicity projection.

Both maps add a codeword to the input so that the result is zero on a
known position set J, which is what lets the interpolation system be
compressed later.  ``offset`` always satisfies ``modified - offset ==
original``; for the projection the offset is guaranteed to be a codeword
only when p >= d - 1.

Sign convention: re-encoding subtracts the matching codeword (adds its
negative), so the agreed positions cancel in every characteristic, not
just characteristic 2.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import spectral
from .code import RSParams, mds_interpolate
from .errors import OffsetNotCodewordWarning, ParameterError
from .field import FieldCtx
from .linalg import gf_matmul, solve_unique

REENCODE = "reencode"
PERIODIC = "periodic"


@dataclass(frozen=True)
class ModifiedVector:
    modified: list[int]
    offset: list[int]        # codeword added to the input: modified = original + offset
    mode: str                # REENCODE or PERIODIC
    zero_at: tuple[int, ...]  # positions where `modified` vanishes by construction
    p: int | None = None     # period, PERIODIC mode only

    @property
    def sigma(self) -> int:
        return len(self.zero_at)

    def original(self, ctx: FieldCtx) -> list[int]:
        return [ctx.sub(m, o) for m, o in zip(self.modified, self.offset)]


def reencode(v: list[int], positions, code: RSParams) -> ModifiedVector:
    """Subtract a codeword agreeing with v on the given positions.

    The result is zero on every agreed position, so its weight is at most
    n - sigma.  With sigma == k the matching codeword is unique (MDS) and
    the map is idempotent.  For sigma < k the matching codeword is made
    unique by forcing the top message coefficients to zero.
    """
    ctx = code.ctx
    v = ctx.check_vector(v)
    positions = sorted(set(int(j) for j in positions))
    sigma = len(positions)
    if sigma == 0:
        raise ParameterError("re-encoding needs at least one position")
    if sigma > code.k:
        raise ParameterError(f"re-encoding supports at most k={code.k} positions, got {sigma}")
    if not all(0 <= j < code.n for j in positions):
        raise ParameterError("positions out of range")

    if sigma == code.k:
        matching = mds_interpolate(positions, [v[j] for j in positions], code)
    else:
        # solve only for the first sigma message coefficients, rest pinned to 0
        n_inv = ctx.inv(ctx.from_int(code.n))
        matrix = [[ctx.mul(n_inv, ctx.alpha_pow(-j * i)) for i in range(sigma)] for j in positions]
        coeffs = solve_unique(matrix, [v[j] for j in positions], ctx)
        matching = spectral.idft(ctx, coeffs + [0] * (code.n - sigma))

    modified = [ctx.sub(a, b) for a, b in zip(v, matching)]
    offset = [ctx.neg(b) for b in matching]
    return ModifiedVector(modified=modified, offset=offset, mode=REENCODE, zero_at=tuple(positions))


def periodic_zero_positions(n: int, p: int) -> tuple[int, ...]:
    """Positions j with (n/p) not dividing j: where the projected vector vanishes."""
    step = n // p
    return tuple(j for j in range(n) if j % step != 0)


def periodicity_projection(v: list[int], p: int, code: RSParams) -> ModifiedVector:
    """Replace the spectrum of v by its last p components repeated n/p times.

    The output's spectrum is p-periodic, so the output itself is supported
    on the multiples of n/p (weight <= p).  The added offset is a codeword
    whenever p >= d - 1; below that a warning is emitted and downstream
    codeword recovery is off the table.
    """
    ctx = code.ctx
    v = ctx.check_vector(v)
    n = ctx.n
    if p < 1 or n % p != 0:
        raise ParameterError(f"period {p} does not divide n = {n}")
    if p < code.d - 1:
        warnings.warn(
            f"period {p} < d-1 = {code.d - 1}: offset need not be a codeword",
            OffsetNotCodewordWarning,
            stacklevel=2,
        )
    spectrum = spectral.dft(ctx, v)
    template = spectrum[n - p:]
    modified = spectral.idft(ctx, template * (n // p))
    offset = [ctx.sub(m, o) for m, o in zip(modified, v)]
    return ModifiedVector(
        modified=modified,
        offset=offset,
        mode=PERIODIC,
        zero_at=periodic_zero_positions(n, p),
        p=p,
    )


def template_time_vector(ctx: FieldCtx, template: list[int], p: int) -> list[int]:
    """Closed-form time-domain vector of a p-periodic spectrum.

    v_j = p^(-1) * sum_s T_s * alpha^(-s*j) on multiples of n/p, else 0.
    Equals idft of the template repeated n/p times; the scale factor is the
    field inverse of p (pinned against idft by a regression test).
    """
    n = ctx.n
    if p < 1 or n % p != 0:
        raise ParameterError(f"period {p} does not divide n = {n}")
    if len(template) != p:
        raise ParameterError(f"template length {len(template)} != p = {p}")
    for t in template:
        ctx.check(t)
    p_inv = ctx.inv(ctx.from_int(p))
    step = n // p
    out = [0] * n
    for j in range(0, n, step):
        acc = 0
        for s, t in enumerate(template):
            if t:
                acc = ctx.add(acc, ctx.mul(t, ctx.alpha_pow(-s * j)))
        out[j] = ctx.mul(p_inv, acc)
    return out


def projection_operator(ctx: FieldCtx, p: int) -> np.ndarray:
    """Dense n x n matrix of the periodicity projection (column convention).

    Composition (idft matrix) @ P @ (dft matrix) where P is zero on its left
    n - p columns and carries n/p stacked p x p identity blocks on the right.
    Applying it to a column vector reproduces ``periodicity_projection``.
    """
    n = ctx.n
    if p < 1 or n % p != 0:
        raise ParameterError(f"period {p} does not divide n = {n}")
    inner = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        inner[i, (n - p) + (i % p)] = 1
    return gf_matmul(gf_matmul(spectral.idft_matrix(ctx), inner, ctx), spectral.dft_matrix(ctx), ctx)
