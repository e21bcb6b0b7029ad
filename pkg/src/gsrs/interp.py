"""Bivariate interpolation step: build, compress and solve the linear system.

The decoder searches for a nonzero Q(x, y) = sum_nu Q_nu(x) y^nu with
deg Q_nu <= dnu[nu] whose mixed Hasse derivatives of total order < s all
vanish at the n points (alpha^(-j), r_j).  That is a homogeneous linear
system with one row per (position, derivative order) triple and one
column per polynomial coefficient.

When the received vector is zero on a position set J (after re-encoding
or the periodicity projection), every alpha^(-j), j in J, is forced to be
a root of Q_b of multiplicity s - b for b < s.  Factoring those roots out
as the known locator polynomial V(x) lets the system be rewritten over
the smaller coefficient sets of W_b = Q_b / V^(s-b): each new column is a
V-weighted combination of old ones, and the rows at positions in J become
identically zero and are pruned.  ``decompress`` undoes the substitution
by polynomial multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import poly
from .errors import CompressionError, ParameterError
from .field import FieldCtx
from .linalg import nullspace_vector
from .modify import PERIODIC, ModifiedVector
from .poly import binom_mod

RowId = tuple[int, int, int]   # (position j, x-order a, y-order b)
ColId = tuple[str, int, int]   # ("Q", nu, mu) or ("W", b, t)


@dataclass(frozen=True)
class GsaParams:
    """Multiplicity/list-size configuration plus the derived degree bounds.

    eps0 is the exact rational radius bound n(2l-s+1)/(2(l+1)) - l(k-1)/(2s);
    the working radius tau defaults to the largest integer strictly below it.
    dnu[nu] = s(n - tau) - 1 - nu(k - 1); a negative entry means the stripe
    Q_nu is identically zero and contributes no columns.
    """

    n: int
    k: int
    s: int
    ell: int
    eps0: Fraction
    tau: int
    dnu: tuple[int, ...]

    @property
    def num_equations(self) -> int:
        return self.n * self.s * (self.s + 1) // 2

    @property
    def num_unknowns(self) -> int:
        return sum(d + 1 for d in self.dnu if d >= 0)


def gsa_params(n: int, k: int, s: int, ell: int, tau_override: int | None = None) -> GsaParams:
    if not 1 <= k <= n:
        raise ParameterError(f"dimension k={k} outside [1, {n}]")
    if not 1 <= s <= ell:
        raise ParameterError(f"need 1 <= s <= ell, got s={s}, ell={ell}")
    eps0 = Fraction(n * (2 * ell - s + 1), 2 * (ell + 1)) - Fraction(ell * (k - 1), 2 * s)
    if eps0 <= 0:
        raise ParameterError(f"radius bound eps0 = {eps0} <= 0; parameters cannot correct anything")
    if tau_override is not None:
        if tau_override < 0 or tau_override >= eps0:
            raise ParameterError(f"tau={tau_override} must lie in [0, eps0={eps0})")
        tau = tau_override
    else:
        tau = math.ceil(eps0) - 1
    dnu = tuple(s * (n - tau) - 1 - nu * (k - 1) for nu in range(ell + 1))
    params = GsaParams(n=n, k=k, s=s, ell=ell, eps0=eps0, tau=tau, dnu=dnu)
    if params.num_unknowns <= params.num_equations:
        raise ParameterError(
            f"{params.num_unknowns} unknowns vs {params.num_equations} equations: "
            "no nonzero solution guaranteed"
        )
    return params


@dataclass
class BivariatePoly:
    """Q(x, y) as a list of x-polynomials indexed by y-degree, each trimmed."""

    qpolys: list[list[int]]

    @property
    def ydeg(self) -> int:
        return len(self.qpolys) - 1

    def is_zero(self) -> bool:
        return all(not q for q in self.qpolys)

    def stripe(self, nu: int) -> list[int]:
        return self.qpolys[nu] if 0 <= nu < len(self.qpolys) else []


def hasse_eval(ctx: FieldCtx, q: BivariatePoly, a: int, b: int, x0: int, y0: int) -> int:
    """(a, b)-th mixed Hasse derivative of Q evaluated at (x0, y0).

    sum over nu >= b, mu >= a of C(mu, a) C(nu, b) Q_{mu, nu} x0^(mu-a) y0^(nu-b),
    binomials reduced mod the characteristic, with 0^0 = 1.
    """
    if a < 0 or b < 0:
        raise ParameterError("derivative orders must be nonnegative")
    p = ctx.characteristic
    acc = 0
    for nu in range(b, len(q.qpolys)):
        cb = binom_mod(nu, b, p)
        if cb == 0:
            continue
        ypow = ctx.pow(y0, nu - b)
        if ypow == 0:
            continue
        stripe_sum = 0
        for mu in range(a, len(q.qpolys[nu])):
            coeff = q.qpolys[nu][mu]
            if coeff == 0:
                continue
            ca = binom_mod(mu, a, p)
            if ca == 0:
                continue
            term = ctx.mul(ctx.from_int(ca), ctx.mul(coeff, ctx.pow(x0, mu - a)))
            stripe_sum = ctx.add(stripe_sum, term)
        acc = ctx.add(acc, ctx.mul(ctx.mul(ctx.from_int(cb), ypow), stripe_sum))
    return acc


@dataclass
class CompressionPlan:
    positions: tuple[int, ...]      # J, sorted
    locator: list[int]              # monic V(x) with roots alpha^(-j), j in J
    locator_powers: list[list[int]]  # V^(s-b) for b = 0 .. s-1
    wdeg: list[int]                 # max degree of W_b; negative = stripe dropped

    @property
    def sigma(self) -> int:
        return len(self.positions)


@dataclass
class InterpolationSystem:
    matrix: np.ndarray              # element codes, one row per constraint
    row_ids: list[RowId]
    col_ids: list[ColId]
    compressed: bool = False
    plan: CompressionPlan | None = None
    pruned_rows: int = 0

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_ids), len(self.col_ids))


def constraint_ids(n: int, s: int) -> list[RowId]:
    """Row order of every system: j ascending, then (a, b) lexicographic, a+b < s."""
    return [(j, a, b) for j in range(n) for a in range(s) for b in range(s - a)]


def _q_col_ids(params: GsaParams) -> list[ColId]:
    return [("Q", nu, mu) for nu in range(params.ell + 1) if params.dnu[nu] >= 0
            for mu in range(params.dnu[nu] + 1)]


def build_system(ctx: FieldCtx, r: list[int], params: GsaParams) -> InterpolationSystem:
    """Assemble the full (uncompressed) interpolation system for r."""
    r = ctx.check_vector(r)
    if params.n != ctx.n:
        raise ParameterError(f"params built for n={params.n}, field has n={ctx.n}")
    p = ctx.characteristic
    row_ids = constraint_ids(params.n, params.s)
    col_ids = _q_col_ids(params)
    matrix = np.zeros((len(row_ids), len(col_ids)), dtype=np.int64)
    for ri, (j, a, b) in enumerate(row_ids):
        x0 = ctx.alpha_pow(-j)
        y0 = r[j]
        for ci, (_, nu, mu) in enumerate(col_ids):
            if nu < b or mu < a:
                continue
            cb = binom_mod(nu, b, p)
            if cb == 0:
                continue
            ca = binom_mod(mu, a, p)
            if ca == 0:
                continue
            ypow = ctx.pow(y0, nu - b)
            if ypow == 0:
                continue
            entry = ctx.mul(ctx.from_int(ca * cb), ctx.mul(ctx.pow(x0, mu - a), ypow))
            matrix[ri, ci] = entry
    return InterpolationSystem(matrix=matrix, row_ids=row_ids, col_ids=col_ids)


def solve_nullspace(system: InterpolationSystem, ctx: FieldCtx, backend: str | None = None) -> np.ndarray:
    """Deterministic nonzero kernel vector of the system matrix.

    Raises :class:`NoSolutionError` when the matrix has full column rank.
    """
    return nullspace_vector(system.matrix, ctx, backend=backend)


def poly_of_solution(solution, system: InterpolationSystem, ctx: FieldCtx, params: GsaParams) -> BivariatePoly:
    """Reshape a kernel vector into Q(x, y), decompressing if needed."""
    if system.compressed:
        return decompress(solution, system.plan, params, ctx)
    qpolys: list[list[int]] = [[0] * (d + 1) if d >= 0 else [] for d in params.dnu]
    for value, (kind, nu, mu) in zip(solution, system.col_ids, strict=True):
        assert kind == "Q"
        qpolys[nu][mu] = int(value)
    return BivariatePoly([poly.trim(q) for q in qpolys])


def interpolate(ctx: FieldCtx, r: list[int], params: GsaParams, backend: str | None = None) -> BivariatePoly:
    """Solve the interpolation problem for r: build, eliminate, reshape."""
    system = build_system(ctx, r, params)
    solution = solve_nullspace(system, ctx, backend=backend)
    return poly_of_solution(solution, system, ctx, params)


# --- locator polynomials and system compression ---------------------------


def locator_poly(ctx: FieldCtx, positions) -> list[int]:
    """Monic product of (x - alpha^(-j)) over the given positions."""
    return poly.monic_from_roots(ctx, [ctx.alpha_pow(-j) for j in sorted(set(positions))])


def periodic_locator_poly(ctx: FieldCtx, p: int) -> list[int]:
    """Locator of the periodicity projection: (x^n - 1)/(x^p - 1).

    Sparse palindrome 1 + x^p + x^(2p) + ... + x^(n-p); equals
    ``locator_poly`` over J = {j : (n/p) does not divide j}.
    """
    n = ctx.n
    if p < 1 or n % p != 0:
        raise ParameterError(f"period {p} does not divide n = {n}")
    out = [0] * (n - p + 1)
    for i in range(0, n - p + 1, p):
        out[i] = 1
    return out


def compression_plan(ctx: FieldCtx, mv: ModifiedVector, params: GsaParams) -> CompressionPlan:
    positions = tuple(sorted(mv.zero_at))
    if mv.mode == PERIODIC and mv.p is not None:
        locator = periodic_locator_poly(ctx, mv.p)
    else:
        locator = locator_poly(ctx, positions)
    sigma = len(positions)
    powers = []
    acc: list[int] = [1]
    for _ in range(params.s):
        acc = poly.mul(ctx, acc, locator)
        powers.append(acc)
    powers.reverse()  # powers[b] = V^(s-b)
    wdeg = [params.dnu[b] - sigma * (params.s - b) for b in range(params.s)]
    return CompressionPlan(positions=positions, locator=locator, locator_powers=powers, wdeg=wdeg)


def _compressed_col_ids(plan: CompressionPlan, params: GsaParams) -> list[ColId]:
    cols: list[ColId] = []
    for nu in range(params.ell + 1):
        if params.dnu[nu] < 0:
            continue
        if nu < params.s:
            if plan.wdeg[nu] >= 0:
                cols.extend(("W", nu, t) for t in range(plan.wdeg[nu] + 1))
        else:
            cols.extend(("Q", nu, mu) for mu in range(params.dnu[nu] + 1))
    return cols


def build_compressed_system(ctx: FieldCtx, mv: ModifiedVector, params: GsaParams) -> InterpolationSystem:
    """Column-substituted, row-pruned system for a modified received vector.

    Every column of a stripe b < s is replaced by a combination of the
    original columns weighted by the coefficients of V^(s-b); rows at the
    zeroed positions are checked to be identically zero and removed.
    """
    for j in mv.zero_at:
        if mv.modified[j] != 0:
            raise CompressionError(f"modified vector is nonzero at agreed position {j}")

    full = build_system(ctx, mv.modified, params)
    plan = compression_plan(ctx, mv, params)
    col_ids = _compressed_col_ids(plan, params)
    if not col_ids:
        raise CompressionError("compression leaves no unknowns at these parameters")

    col_index = {cid: i for i, cid in enumerate(full.col_ids)}
    rows = full.matrix.shape[0]
    matrix = np.zeros((rows, len(col_ids)), dtype=np.int64)
    for ci, cid in enumerate(col_ids):
        kind, nu, idx = cid
        if kind == "Q":
            matrix[:, ci] = full.matrix[:, col_index[("Q", nu, idx)]]
            continue
        vb = plan.locator_powers[nu]
        for i, coeff in enumerate(vb):
            if coeff == 0:
                continue
            src = full.matrix[:, col_index[("Q", nu, idx + i)]]
            for ri in range(rows):
                val = int(src[ri])
                if val:
                    matrix[ri, ci] = ctx.add(int(matrix[ri, ci]), ctx.mul(coeff, val))

    pruned = set(plan.positions)
    keep: list[int] = []
    for ri, (j, a, b) in enumerate(full.row_ids):
        if j in pruned:
            if matrix[ri].any():
                raise CompressionError(
                    f"row (j={j}, a={a}, b={b}) scheduled for pruning is not zero"
                )
        else:
            keep.append(ri)
    kept_ids = [full.row_ids[ri] for ri in keep]
    return InterpolationSystem(
        matrix=matrix[keep],
        row_ids=kept_ids,
        col_ids=col_ids,
        compressed=True,
        plan=plan,
        pruned_rows=rows - len(keep),
    )


def decompress(solution, plan: CompressionPlan, params: GsaParams, ctx: FieldCtx) -> BivariatePoly:
    """Recover Q(x, y) from a compressed kernel vector: Q_b = W_b * V^(s-b).

    The result satisfies every original constraint for the modified vector,
    including the pruned rows.
    """
    col_ids = _compressed_col_ids(plan, params)
    if len(col_ids) != len(solution):
        raise ParameterError(f"solution length {len(solution)} != {len(col_ids)} columns")
    qpolys: list[list[int]] = [[] for _ in range(params.ell + 1)]
    wpolys: dict[int, list[int]] = {b: [0] * (plan.wdeg[b] + 1) for b in range(params.s) if plan.wdeg[b] >= 0}
    direct: dict[int, list[int]] = {nu: [0] * (params.dnu[nu] + 1)
                                    for nu in range(params.s, params.ell + 1) if params.dnu[nu] >= 0}
    for value, (kind, nu, idx) in zip(solution, col_ids, strict=True):
        if kind == "W":
            wpolys[nu][idx] = int(value)
        else:
            direct[nu][idx] = int(value)
    for b, w in wpolys.items():
        qb = poly.mul(ctx, poly.trim(w), plan.locator_powers[b])
        if poly.deg(qb) > params.dnu[b]:
            raise CompressionError(f"decompressed stripe {b} exceeds its degree bound")
        qpolys[b] = qb
    for nu, q in direct.items():
        qpolys[nu] = poly.trim(q)
    return BivariatePoly(qpolys)


def verify_multiplicity(ctx: FieldCtx, q: BivariatePoly, r: list[int], params: GsaParams) -> bool:
    """Full sweep: every Hasse derivative of total order < s vanishes at every point."""
    for j in range(params.n):
        x0, y0 = ctx.alpha_pow(-j), r[j]
        for a in range(params.s):
            for b in range(params.s - a):
                if hasse_eval(ctx, q, a, b, x0, y0) != 0:
                    return False
    return True
