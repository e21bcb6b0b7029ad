"""Frequency-domain Reed-Solomon codes of primitive length n = q - 1.

A codeword is the inverse DFT of a spectrum whose top n - k positions
vanish; equivalently, c_j = n^(-1) * C(alpha^(-j)) for the degree-< k
message polynomial C.  The code is MDS: any k positions determine the
codeword, which is what both the re-encoding map and the erasure-style
interpolation below rely on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import spectral
from .errors import ParameterError
from .field import FieldCtx
from .linalg import solve_unique

Message = list[int]
Codeword = list[int]


@dataclass(frozen=True)
class RSParams:
    ctx: FieldCtx
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.ctx.n:
            raise ParameterError(f"dimension k={self.k} outside [1, {self.ctx.n}]")

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def d(self) -> int:
        """Minimum distance, n - k + 1 (Singleton equality)."""
        return self.n - self.k + 1


def encode(msg: Message, code: RSParams) -> Codeword:
    msg = list(msg)
    if len(msg) != code.k:
        raise ParameterError(f"message length {len(msg)} != k = {code.k}")
    spectrum = msg + [0] * (code.n - code.k)
    return spectral.idft(code.ctx, spectrum)


def message_of(c: Codeword, code: RSParams) -> Message:
    """First k spectrum positions of a codeword (inverse of encode)."""
    return spectral.dft(code.ctx, c)[: code.k]


def is_codeword(v: list[int], code: RSParams) -> bool:
    spectrum = spectral.dft(code.ctx, v)
    return all(x == 0 for x in spectrum[code.k:])


def mds_interpolate(positions, values, code: RSParams) -> Codeword:
    """Unique codeword taking the given values on k distinct positions.

    Solves the k x k system c_j = n^(-1) * sum_i C_i * alpha^(-j*i) for the
    message coefficients, then re-encodes.  The system matrix is Vandermonde
    in the alpha^(-j), hence always nonsingular for distinct positions.
    """
    ctx = code.ctx
    positions = list(positions)
    values = list(values)
    if len(positions) != len(set(positions)) or len(positions) != code.k:
        raise ParameterError(f"need exactly k={code.k} distinct positions")
    if len(values) != code.k:
        raise ParameterError("one value per position required")
    n_inv = ctx.inv(ctx.from_int(code.n))
    matrix = [[ctx.mul(n_inv, ctx.alpha_pow(-j * i)) for i in range(code.k)] for j in positions]
    msg = solve_unique(matrix, values, ctx)
    return encode(msg, code)


def hamming_weight(v) -> int:
    return sum(1 for x in v if x != 0)


def hamming_distance(a, b) -> int:
    return sum(1 for x, y in zip(a, b, strict=True) if x != y)


def add_errors(
    c: Codeword,
    code: RSParams,
    at: list[tuple[int, int]] | None = None,
    weight: int | None = None,
    seed: int | None = None,
) -> tuple[list[int], list[int]]:
    """Corrupt a codeword; returns ``(received, error_vector)``.

    Either pass explicit ``at=[(position, value), ...]`` with nonzero values,
    or ``weight`` and ``seed`` for a reproducible random pattern: positions
    drawn without replacement, values uniform over the nonzero elements.
    """
    ctx = code.ctx
    c = ctx.check_vector(c)
    e = [0] * code.n
    if at is not None:
        if weight is not None:
            raise ParameterError("pass explicit errors or a weight, not both")
        positions = [j for j, _ in at]
        if len(set(positions)) != len(positions):
            raise ParameterError("error positions must be distinct")
        for j, val in at:
            if not 0 <= j < code.n:
                raise ParameterError(f"error position {j} out of range")
            ctx.check(val)
            if val == 0:
                raise ParameterError("error values must be nonzero")
            e[j] = val
    else:
        if weight is None:
            raise ParameterError("need explicit errors or a weight")
        if not 0 <= weight <= code.n:
            raise ParameterError(f"error weight {weight} outside [0, {code.n}]")
        rng = random.Random(seed)
        for j in sorted(rng.sample(range(code.n), weight)):
            e[j] = rng.randrange(1, ctx.q)
    r = [ctx.add(ci, ei) for ci, ei in zip(c, e)]
    return r, e
