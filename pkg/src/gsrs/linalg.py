"""Linear algebra over GF(q): backend selection plus small dense helpers.

The nullspace kernel has two interchangeable implementations: a compiled
Cython extension (``gsrs._gfsolve``) and a pure-Python fallback
(``gsrs._pysolve``).  The compiled one is picked at import when present;
set ``GSRS_BACKEND=pure`` before import to force the fallback (the
benchmark uses this to compare the two).
"""

from __future__ import annotations

import os

import numpy as np

from . import _pysolve
from .errors import NoSolutionError
from .field import FieldCtx

try:
    from . import _gfsolve  # type: ignore[attr-defined]
except ImportError:
    _gfsolve = None

_FORCED = os.environ.get("GSRS_BACKEND", "").strip().lower()
if _FORCED == "pure":
    _default = _pysolve
elif _FORCED == "compiled":
    if _gfsolve is None:
        raise ImportError("GSRS_BACKEND=compiled but the extension is not built")
    _default = _gfsolve
else:
    _default = _gfsolve if _gfsolve is not None else _pysolve

HAVE_COMPILED = _gfsolve is not None
BACKEND = "compiled" if _default is _gfsolve and _gfsolve is not None else "pure"


def backends() -> dict[str, object]:
    """Installed backend modules keyed by name."""
    out: dict[str, object] = {"pure": _pysolve}
    if _gfsolve is not None:
        out["compiled"] = _gfsolve
    return out


def nullspace(matrix: np.ndarray, ctx: FieldCtx, backend: str | None = None):
    """Deterministic kernel vector and rank of ``matrix`` over GF(q).

    Pivoting runs rows top-to-bottom and columns left-to-right; the kernel
    vector sets the first free column to 1 and later free columns to 0.
    ``(None, rank)`` signals a trivial kernel.
    """
    impl = _default if backend is None else backends()[backend]
    matrix = np.ascontiguousarray(matrix, dtype=np.int64)
    return impl.nullspace(matrix, ctx)


def nullspace_vector(matrix: np.ndarray, ctx: FieldCtx, backend: str | None = None) -> np.ndarray:
    """Like :func:`nullspace` but raises :class:`NoSolutionError` on full column rank."""
    x, _rank = nullspace(matrix, ctx, backend=backend)
    if x is None:
        raise NoSolutionError("no interpolation solution; parameters infeasible for this radius")
    return x


def solve_unique(matrix, rhs, ctx: FieldCtx) -> list[int]:
    """Solve a square nonsingular system over GF(q) by elimination."""
    a = [[int(v) for v in row] for row in matrix]
    b = [int(v) for v in rhs]
    size = len(a)
    for c in range(size):
        piv = next((i for i in range(c, size) if a[i][c] != 0), -1)
        if piv < 0:
            raise NoSolutionError("singular system")
        a[c], a[piv] = a[piv], a[c]
        b[c], b[piv] = b[piv], b[c]
        f = ctx.inv(a[c][c])
        a[c] = [ctx.mul(f, v) for v in a[c]]
        b[c] = ctx.mul(f, b[c])
        for i in range(size):
            if i != c and a[i][c]:
                g = a[i][c]
                a[i] = [ctx.sub(a[i][j], ctx.mul(g, a[c][j])) for j in range(size)]
                b[i] = ctx.sub(b[i], ctx.mul(g, b[c]))
    return b


def gf_matvec(matrix, x, ctx: FieldCtx) -> list[int]:
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, x):
            if a and b:
                acc = ctx.add(acc, ctx.mul(int(a), int(b)))
        out.append(acc)
    return out


def gf_matmul(a, b, ctx: FieldCtx) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    rows, inner = a.shape
    inner2, cols = b.shape
    assert inner == inner2
    out = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for t in range(inner):
            v = int(a[i, t])
            if v == 0:
                continue
            for j in range(cols):
                w = int(b[t, j])
                if w:
                    out[i, j] = ctx.add(int(out[i, j]), ctx.mul(v, w))
    return out
