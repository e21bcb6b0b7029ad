"""Command-line interface.

Vectors travel on stdin/stdout as JSON arrays of integer element codes,
so subcommands compose:

    gsrs encode --q 5 --k 2 1,1 | gsrs corrupt --q 5 --errors 1 --seed 7 \
        | gsrs decode --q 5 --k 2 --mode periodic

Exit codes: 0 success, 1 usage/parameter error, 2 decode failure
(empty candidate list or unsolvable system).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import linalg
from .code import RSParams, add_errors, encode
from .errors import CompressionError, NoSolutionError, ParameterError
from .field import FieldCtx, FieldError, build_field
from .interp import build_compressed_system, build_system, gsa_params
from .linalg import nullspace
from .modify import PERIODIC, REENCODE, periodicity_projection, reencode
from .pipeline import (
    DEFAULT_GRID,
    PLAIN,
    BenchCase,
    DecodeConfig,
    bench,
    bench_csv,
    decode,
    default_period,
    modify_for_mode,
)
from .selfcheck import run_selftest

USAGE_ERROR, DECODE_FAILURE = 1, 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for decode failure."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _field_from_args(args) -> FieldCtx:
    if args.q is None:
        raise ParameterError("--q is required")
    text = args.q
    if "^" in text:
        cpart, mpart = text.split("^", 1)
        characteristic, m = int(cpart), int(mpart)
    else:
        characteristic, m = int(text), 1
    modulus = None
    if args.mod:
        modulus = tuple(int(c) for c in args.mod.split(","))
    return build_field(characteristic, m, modulus)


def _read_vector(ctx: FieldCtx) -> list[int]:
    data = json.loads(sys.stdin.read())
    if not isinstance(data, list):
        raise ParameterError("stdin must hold a JSON array of element codes")
    return ctx.check_vector(data)


def _parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def _emit(obj) -> None:
    print(json.dumps(obj))


def _decode_config(args, ctx: FieldCtx) -> DecodeConfig:
    return DecodeConfig(
        ctx=ctx,
        k=args.k,
        s=args.s,
        ell=args.ell,
        mode=args.mode,
        positions=tuple(_parse_ints(args.positions)) if args.positions else None,
        p=args.p,
        tau=args.tau,
        seed=args.seed,
    )


def cmd_field(args) -> int:
    ctx = _field_from_args(args)
    _emit({
        "q": ctx.q, "characteristic": ctx.characteristic, "m": ctx.m,
        "n": ctx.n, "modulus": list(ctx.modulus), "alpha": ctx.alpha,
    })
    return 0


def cmd_encode(args) -> int:
    ctx = _field_from_args(args)
    if args.k is None:
        raise ParameterError("--k is required")
    msg = _parse_ints(args.message) if args.message != "-" else json.loads(sys.stdin.read())
    codeword = encode(msg, RSParams(ctx, args.k))
    _emit(codeword)
    return 0


def cmd_corrupt(args) -> int:
    ctx = _field_from_args(args)
    code = RSParams(ctx, args.k if args.k is not None else ctx.n)
    v = _read_vector(ctx)
    if args.at:
        pairs = [(int(j), int(val)) for j, val in
                 (item.split(":", 1) for item in args.at.split(","))]
        r, e = add_errors(v, code, at=pairs)
    else:
        if args.errors is None:
            raise ParameterError("--errors or --at is required")
        r, e = add_errors(v, code, weight=args.errors, seed=args.seed)
    if args.json:
        _emit({"received": r, "error": e})
    else:
        _emit(r)
    return 0


def cmd_modify(args) -> int:
    ctx = _field_from_args(args)
    if args.k is None:
        raise ParameterError("--k is required")
    if args.mode == PLAIN:
        raise ParameterError("--mode must be reencode or periodic")
    v = _read_vector(ctx)
    code = RSParams(ctx, args.k)
    if args.mode == REENCODE:
        positions = tuple(_parse_ints(args.positions)) if args.positions else tuple(range(args.k))
        mv = reencode(v, positions, code)
    else:
        p = args.p if args.p is not None else default_period(code.n, code.d)
        mv = periodicity_projection(v, p, code)
    _emit({
        "modified": mv.modified, "offset": mv.offset, "mode": mv.mode,
        "sigma": mv.sigma, "zero_at": list(mv.zero_at), "p": mv.p,
    })
    return 0


def cmd_decode(args) -> int:
    ctx = _field_from_args(args)
    if args.k is None:
        raise ParameterError("--k is required")
    r = _read_vector(ctx)
    report = decode(r, _decode_config(args, ctx))
    _emit(report.as_dict())
    return 0 if report.status == "ok" and report.candidates else DECODE_FAILURE


def cmd_analyze(args) -> int:
    ctx = _field_from_args(args)
    if args.k is None:
        raise ParameterError("--k is required")
    r = _read_vector(ctx)
    cfg = _decode_config(args, ctx)
    params = cfg.params()
    if args.mode == PLAIN:
        system = build_system(ctx, r, params)
        locator = None
    else:
        mv = modify_for_mode(r, cfg)
        system = build_compressed_system(ctx, mv, params)
        locator = system.plan.locator
    _, rank = nullspace(system.matrix, ctx)
    rows, cols = system.shape
    nonzero = int((system.matrix != 0).sum())
    _emit({
        "rows": rows, "cols": cols, "rank": rank,
        "pruned_rows": system.pruned_rows,
        "nonzero_density": nonzero / (rows * cols) if rows and cols else 0.0,
        "locator": locator,
        "tau": params.tau,
        "eps0": [params.eps0.numerator, params.eps0.denominator],
    })
    return 0


def _parse_case(text: str) -> BenchCase:
    """Case syntax: FIELD:k=K:s=S:ell=L[:p=P], e.g. 2^4:k=3:s=1:ell=2:p=5."""
    parts = text.split(":")
    spec = parts[0] if parts[0].startswith("q=") else f"q={parts[0]}"
    kwargs: dict = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        if key not in ("k", "s", "ell", "p"):
            raise ParameterError(f"unknown bench case key {key!r} in {text!r}")
        kwargs[key] = int(value)
    if "k" not in kwargs:
        raise ParameterError(f"bench case {text!r} needs k=")
    return BenchCase(field_spec=spec, **kwargs)


def cmd_bench(args) -> int:
    cases = tuple(_parse_case(c) for c in args.case) if args.case else DEFAULT_GRID
    if args.backend == "both":
        backends = tuple(linalg.backends())
    else:
        if args.backend not in linalg.backends():
            raise ParameterError(f"backend {args.backend!r} not available")
        backends = (args.backend,)
    rows = bench(cases, trials=args.trials, seed=args.seed or 0, backends=backends)
    if args.csv:
        text = bench_csv(rows)
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            with open(args.csv, "w") as fh:
                fh.write(text)
    if args.json or not args.csv:
        _emit(rows)
    return 0


def cmd_selftest(args) -> int:
    return 0 if run_selftest(verbose=True) else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="gsrs", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", help="field size as CHAR or CHAR^M, e.g. 5 or 2^4")
    common.add_argument("--mod", help="extension modulus coefficients, low-to-high, comma-separated")
    common.add_argument("--k", type=int, help="code dimension")
    common.add_argument("--s", type=int, default=1, help="interpolation multiplicity (default 1)")
    common.add_argument("--ell", type=int, default=1, help="list size / y-degree bound (default 1)")
    common.add_argument("--mode", choices=(PLAIN, REENCODE, PERIODIC), default=PLAIN)
    common.add_argument("--p", type=int, help="period for periodic mode (default: smallest sound divisor)")
    common.add_argument("--positions", help="re-encoding positions, comma-separated (default: first k)")
    common.add_argument("--tau", type=int, help="decoding radius override (must stay below eps0)")
    common.add_argument("--seed", type=int, help="RNG seed where randomness is involved")
    common.add_argument("--json", action="store_true", help="structured output where a bare vector is the default")

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common], help="print field parameters").set_defaults(fn=cmd_field)

    enc = sub.add_parser("encode", parents=[common], help="encode a message")
    enc.add_argument("message", help="comma-separated message coefficients, or - for JSON on stdin")
    enc.set_defaults(fn=cmd_encode)

    cor = sub.add_parser("corrupt", parents=[common], help="add errors to a vector from stdin")
    cor.add_argument("--errors", type=int, help="number of random errors")
    cor.add_argument("--at", help="explicit errors as pos:val,pos:val,...")
    cor.set_defaults(fn=cmd_corrupt)

    sub.add_parser("modify", parents=[common],
                   help="re-encode or project a vector from stdin").set_defaults(fn=cmd_modify)
    sub.add_parser("decode", parents=[common],
                   help="list-decode a vector from stdin").set_defaults(fn=cmd_decode)
    sub.add_parser("analyze", parents=[common],
                   help="report interpolation-system structure for a vector from stdin").set_defaults(fn=cmd_analyze)

    ben = sub.add_parser("bench", parents=[common], help="benchmark system sizes and solve times")
    ben.add_argument("--case", action="append",
                     help="FIELD:k=K:s=S:ell=L[:p=P]; repeatable; default grid if omitted")
    ben.add_argument("--trials", type=int, default=10)
    ben.add_argument("--csv", help="write CSV here ('-' for stdout)")
    ben.add_argument("--backend", choices=("pure", "compiled", "both"), default="both")
    ben.set_defaults(fn=cmd_bench)

    sub.add_parser("selftest", parents=[common],
                   help="run the built-in verification suites").set_defaults(fn=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParameterError, FieldError, ValueError, CompressionError) as exc:
        print(f"gsrs: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except NoSolutionError as exc:
        print(f"gsrs: decode failed: {exc}", file=sys.stderr)
        return DECODE_FAILURE


if __name__ == "__main__":
    sys.exit(main())
