"""End-to-end list decoder in three modes, plus the benchmark harness.

plain     – interpolate the received vector directly.
reencode  – zero k positions first, solve the compressed system, map the
            candidates back by subtracting the offset codeword.
periodic  – same, but the positions are zeroed by the periodicity
            projection (requires p | n and p >= d - 1 so the offset is a
            codeword and recovery is sound).

Candidate distances are always reported against the original received
vector.  With error weight <= tau all three modes return the same
candidate set.
"""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass

from . import linalg
from .code import RSParams, hamming_distance, message_of
from .errors import NoSolutionError, ParameterError
from .factor import Candidate, _sorted_list, candidates, y_roots
from .field import FieldCtx, parse_field_spec
from .interp import (
    GsaParams,
    build_compressed_system,
    build_system,
    gsa_params,
    poly_of_solution,
    solve_nullspace,
)
from .modify import PERIODIC, REENCODE, ModifiedVector, periodicity_projection, reencode

PLAIN = "plain"
MODES = (PLAIN, REENCODE, PERIODIC)


def default_period(n: int, d: int) -> int:
    """Smallest divisor of n at least d - 1 (maximal sound compression)."""
    return next(p for p in range(1, n + 1) if n % p == 0 and p >= d - 1)


@dataclass(frozen=True)
class DecodeConfig:
    ctx: FieldCtx
    k: int
    s: int = 1
    ell: int = 1
    mode: str = PLAIN
    positions: tuple[int, ...] | None = None  # reencode only; default first k
    p: int | None = None                      # periodic only; default smallest sound divisor
    tau: int | None = None                    # radius override, must stay below eps0
    seed: int | None = None

    def code(self) -> RSParams:
        return RSParams(self.ctx, self.k)

    def params(self) -> GsaParams:
        return gsa_params(self.ctx.n, self.k, self.s, self.ell, self.tau)

    def resolved_positions(self) -> tuple[int, ...]:
        if self.positions is None:
            return tuple(range(self.k))
        positions = tuple(sorted(set(self.positions)))
        if len(positions) != self.k:
            raise ParameterError(f"re-encoding mode needs exactly k={self.k} positions")
        return positions

    def resolved_period(self) -> int:
        code = self.code()
        p = self.p if self.p is not None else default_period(code.n, code.d)
        if p < 1 or code.n % p != 0:
            raise ParameterError(f"period {p} does not divide n = {code.n}")
        if p < code.d - 1:
            raise ParameterError(
                f"period {p} < d-1 = {code.d - 1}: offset would not be a codeword; "
                "decode requires a sound period"
            )
        return p


@dataclass
class DecodeReport:
    mode: str
    status: str                      # "ok" or "no_solution"
    candidates: list[Candidate]
    shape_before: tuple[int, int]
    shape_after: tuple[int, int]
    pruned_rows: int
    solve_time: float
    tau: int

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "status": self.status,
            "candidates": [c.as_dict() for c in self.candidates],
            "system_shape": {"before": list(self.shape_before), "after": list(self.shape_after)},
            "pruned_rows": self.pruned_rows,
            "solve_time": self.solve_time,
            "tau": self.tau,
        }


def modify_for_mode(r: list[int], cfg: DecodeConfig) -> ModifiedVector:
    if cfg.mode == REENCODE:
        return reencode(r, cfg.resolved_positions(), cfg.code())
    if cfg.mode == PERIODIC:
        return periodicity_projection(r, cfg.resolved_period(), cfg.code())
    raise ParameterError(f"unknown modification mode {cfg.mode!r}")


def decode(r: list[int], cfg: DecodeConfig, backend: str | None = None) -> DecodeReport:
    ctx = cfg.ctx
    code = cfg.code()
    params = cfg.params()
    r = ctx.check_vector(r)

    if cfg.mode == PLAIN:
        system = build_system(ctx, r, params)
        shape_before = shape_after = system.shape
        reference = r
        mv = None
    elif cfg.mode in (REENCODE, PERIODIC):
        mv = modify_for_mode(r, cfg)
        system = build_compressed_system(ctx, mv, params)
        shape_before = (params.num_equations, params.num_unknowns)
        shape_after = system.shape
        reference = mv.modified
    else:
        raise ParameterError(f"unknown decode mode {cfg.mode!r}")

    start = time.perf_counter()
    try:
        solution = solve_nullspace(system, ctx, backend=backend)
    except NoSolutionError:
        return DecodeReport(
            mode=cfg.mode, status="no_solution", candidates=[],
            shape_before=shape_before, shape_after=shape_after,
            pruned_rows=system.pruned_rows, solve_time=time.perf_counter() - start,
            tau=params.tau,
        )
    solve_time = time.perf_counter() - start

    q = poly_of_solution(solution, system, ctx, params)
    roots = y_roots(ctx, q, cfg.k)
    found = candidates(ctx, roots, code, reference, params.tau)

    if mv is not None:
        mapped = []
        for cand in found:
            cw = tuple(ctx.sub(ci, oi) for ci, oi in zip(cand.codeword, mv.offset))
            dist = hamming_distance(cw, r)
            if dist <= params.tau:
                mapped.append(Candidate(tuple(message_of(list(cw), code)), cw, dist))
        found = _sorted_list(mapped)

    return DecodeReport(
        mode=cfg.mode, status="ok", candidates=found,
        shape_before=shape_before, shape_after=shape_after,
        pruned_rows=system.pruned_rows, solve_time=solve_time,
        tau=params.tau,
    )


# --- benchmark harness -----------------------------------------------------


@dataclass(frozen=True)
class BenchCase:
    field_spec: str
    k: int
    s: int = 1
    ell: int = 1
    modes: tuple[str, ...] = MODES
    p: int | None = None  # explicit period for the periodic rows


DEFAULT_GRID = (
    BenchCase("q=5", k=2, s=1, ell=1, p=2),
    BenchCase("q=2^4,mod=1,1,0,0,1", k=3, s=1, ell=2),
    BenchCase("q=7", k=2, s=2, ell=3, p=3),
)

BENCH_FIELDS = ("q", "k", "s", "ell", "mode", "p", "backend",
                "rows", "cols", "pruned", "trials", "mean_solve_time")


def bench(cases=DEFAULT_GRID, trials: int = 10, seed: int = 0,
          backends: tuple[str, ...] | None = None) -> list[dict]:
    """Measure system sizes and mean elimination time per case/mode/backend.

    The structural columns (rows, cols, pruned) are deterministic in the
    seed; the timing column obviously is not.  trials == 0 yields an empty
    table.  Benchmark rows may use periods below d - 1 (the system shape
    and solve cost are what is measured, not codeword recovery), so the
    projection's offset warning is suppressed here.
    """
    if backends is None:
        backends = tuple(linalg.backends())
    rows: list[dict] = []
    if trials <= 0:
        return rows
    for case_idx, case in enumerate(cases):
        ctx = parse_field_spec(case.field_spec)
        code = RSParams(ctx, case.k)
        params = gsa_params(ctx.n, case.k, case.s, case.ell)
        for mode in case.modes:
            systems = []
            rng = random.Random(f"{seed}:{case_idx}:{mode}")  # str seeding is stable across processes
            for _ in range(trials):
                r = [rng.randrange(ctx.q) for _ in range(ctx.n)]
                if mode == PLAIN:
                    systems.append(build_system(ctx, r, params))
                else:
                    if mode == REENCODE:
                        mv = reencode(r, range(case.k), code)
                    else:
                        p = case.p if case.p is not None else default_period(code.n, code.d)
                        with warnings.catch_warnings():
                            warnings.simplefilter("ignore")
                            mv = periodicity_projection(r, p, code)
                    systems.append(build_compressed_system(ctx, mv, params))
            for backend in backends:
                start = time.perf_counter()
                for system in systems:
                    solve_nullspace(system, ctx, backend=backend)
                elapsed = (time.perf_counter() - start) / trials
                sysshape = systems[0].shape
                rows.append({
                    "q": ctx.q, "k": case.k, "s": case.s, "ell": case.ell,
                    "mode": mode,
                    "p": (case.p if case.p is not None else default_period(code.n, code.d))
                         if mode == PERIODIC else None,
                    "backend": backend,
                    "rows": sysshape[0], "cols": sysshape[1],
                    "pruned": systems[0].pruned_rows,
                    "trials": trials,
                    "mean_solve_time": elapsed,
                })
    return rows


def bench_csv(rows: list[dict]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS)
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
