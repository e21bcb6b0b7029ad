"""Built-in verification suites behind the ``selftest`` CLI subcommand.

Each suite returns (name, ok, detail).  They mirror the heavyweight test
suite at reduced trial counts so a deployed install can sanity-check
itself in a few seconds without pytest.
"""

from __future__ import annotations

import random
import warnings

from . import linalg
from .code import RSParams, add_errors, encode, hamming_distance
from .errors import OffsetNotCodewordWarning
from .factor import brute_force_list
from .field import build_field
from .interp import build_compressed_system, build_system, gsa_params, poly_of_solution, verify_multiplicity
from .linalg import gf_matvec, nullspace_vector
from .modify import periodicity_projection, reencode
from .pipeline import MODES, DecodeConfig, decode
from .spectral import dft, idft


def _check_field(ctx) -> str | None:
    for a in range(1, ctx.q):
        if ctx.mul(a, ctx.inv(a)) != 1:
            return f"inverse failed at {a}"
        if ctx.exp_table[ctx.log_table[a]] != a:
            return f"exp/log round trip failed at {a}"
    rng = random.Random(1)
    for _ in range(200):
        a, b, c = (rng.randrange(ctx.q) for _ in range(3))
        if ctx.mul(a, ctx.add(b, c)) != ctx.add(ctx.mul(a, b), ctx.mul(a, c)):
            return f"distributivity failed at {(a, b, c)}"
    return None


def suite_field_axioms() -> tuple[str, bool, str]:
    for ctx in (build_field(5), build_field(7), build_field(2, 4)):
        err = _check_field(ctx)
        if err:
            return "field-axioms", False, f"GF({ctx.q}): {err}"
    return "field-axioms", True, "GF(5), GF(7), GF(16)"


def suite_transform_roundtrip() -> tuple[str, bool, str]:
    ctx5 = build_field(5)
    import itertools
    for v in itertools.product(range(5), repeat=4):
        v = list(v)
        if idft(ctx5, dft(ctx5, v)) != v:
            return "transform-roundtrip", False, f"GF(5) failed at {v}"
    ctx16 = build_field(2, 4)
    rng = random.Random(2)
    for _ in range(50):
        v = [rng.randrange(16) for _ in range(15)]
        if idft(ctx16, dft(ctx16, v)) != v or dft(ctx16, idft(ctx16, v)) != v:
            return "transform-roundtrip", False, f"GF(16) failed at {v}"
    return "transform-roundtrip", True, "GF(5) exhaustive, GF(16) randomized"


def suite_exhaustive_half_distance() -> tuple[str, bool, str]:
    """GF(5), (4,2), s=ell=1: every message, every weight<=1 error, all modes."""
    import itertools
    ctx = build_field(5)
    code = RSParams(ctx, 2)
    checked = 0
    for msg in itertools.product(range(5), repeat=2):
        c = encode(list(msg), code)
        patterns = [[]] + [[(j, v)] for j in range(4) for v in range(1, 5)]
        for at in patterns:
            r, _ = add_errors(c, code, at=at) if at else (list(c), [0] * 4)
            expected = brute_force_list(code, r, tau=1)
            for mode in MODES:
                report = decode(r, DecodeConfig(ctx=ctx, k=2, mode=mode))
                if report.candidates != expected:
                    return ("exhaustive-half-distance", False,
                            f"msg={msg} at={at} mode={mode}: {report.candidates} != {expected}")
                if tuple(c) not in {cand.codeword for cand in report.candidates}:
                    return "exhaustive-half-distance", False, f"transmitted lost: {msg}/{at}/{mode}"
                checked += 1
    return "exhaustive-half-distance", True, f"{checked} decodes match brute force"


def suite_beyond_half_distance(trials: int = 30) -> tuple[str, bool, str]:
    """GF(16), (15,3), s=1, ell=2, weight-7 errors (past half distance 6)."""
    ctx = build_field(2, 4)
    code = RSParams(ctx, 3)
    rng = random.Random(7)
    for t in range(trials):
        msg = [rng.randrange(16) for _ in range(3)]
        c = encode(msg, code)
        r, _ = add_errors(c, code, weight=7, seed=rng.randrange(1 << 32))
        for mode in MODES:
            report = decode(r, DecodeConfig(ctx=ctx, k=3, s=1, ell=2, mode=mode))
            if tuple(c) not in {cand.codeword for cand in report.candidates}:
                return "beyond-half-distance", False, f"trial {t} mode {mode}: codeword missing"
    return "beyond-half-distance", True, f"{trials} weight-7 trials, all modes"


def suite_multiplicity_compression(trials: int = 15) -> tuple[str, bool, str]:
    """GF(7), (6,2), s=2, ell=3: Hasse sweep plus compressed/uncompressed agreement."""
    ctx = build_field(7)
    code = RSParams(ctx, 2)
    params = gsa_params(6, 2, 2, 3)
    rng = random.Random(11)
    for t in range(trials):
        r = [rng.randrange(7) for _ in range(6)]
        system = build_system(ctx, r, params)
        q = poly_of_solution(nullspace_vector(system.matrix, ctx), system, ctx, params)
        if not verify_multiplicity(ctx, q, r, params):
            return "multiplicity-compression", False, f"trial {t}: Hasse sweep failed"
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OffsetNotCodewordWarning)
            mv = periodicity_projection(r, 3, code)
        csys = build_compressed_system(ctx, mv, params)
        if csys.shape != (9, params.num_unknowns - 9) or csys.pruned_rows != 9:
            return "multiplicity-compression", False, f"trial {t}: wrong shape {csys.shape}"
        solution = nullspace_vector(csys.matrix, ctx)
        qc = poly_of_solution(solution, csys, ctx, params)
        full = build_system(ctx, mv.modified, params)
        flat = [qc.stripe(nu)[mu] if mu < len(qc.stripe(nu)) else 0 for (_, nu, mu) in full.col_ids]
        if any(v != 0 for v in gf_matvec(full.matrix, flat, ctx)):
            return "multiplicity-compression", False, f"trial {t}: decompressed not in kernel"
    return "multiplicity-compression", True, f"{trials} random vectors"


def suite_modification_idempotence() -> tuple[str, bool, str]:
    import itertools
    ctx = build_field(5)
    code = RSParams(ctx, 2)
    for v in itertools.product(range(5), repeat=4):
        v = list(v)
        re1 = reencode(v, (0, 1), code).modified
        if reencode(re1, (0, 1), code).modified != re1:
            return "modification-idempotence", False, f"reencode at {v}"
        pp1 = periodicity_projection(v, 2, code).modified
        if periodicity_projection(pp1, 2, code).modified != pp1:
            return "modification-idempotence", False, f"projection at {v}"
    return "modification-idempotence", True, "625 vectors over GF(5)"


def run_selftest(verbose: bool = True) -> bool:
    suites = (
        suite_field_axioms,
        suite_transform_roundtrip,
        suite_modification_idempotence,
        suite_exhaustive_half_distance,
        suite_multiplicity_compression,
        suite_beyond_half_distance,
    )
    all_ok = True
    for fn in suites:
        name, ok, detail = fn()
        all_ok &= ok
        if verbose:
            print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    if verbose:
        print(f"backend: {linalg.BACKEND}" + (" (compiled available)" if linalg.HAVE_COMPILED else ""))
    return all_ok
