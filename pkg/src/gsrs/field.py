"""Exact arithmetic in GF(q) for prime powers q = char^m.

Elements are plain Python ints in [0, q).  For m == 1 the int is the
residue mod char; for m > 1 it is the base-char positional encoding of
the polynomial representative (digit i holds the coefficient of x^i).
This integer coding is what every public API and all serialized output
use, so vectors travel as ordinary JSON integer arrays.

Multiplication, division and powering go through discrete exp/log
tables built from a primitive element alpha; addition is digit-wise
mod char (XOR in characteristic 2).  Fields are capped at q <= 2^20:
this library targets desk-scale codes, not bulk throughput.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class FieldError(ValueError):
    """Invalid field construction or element arithmetic."""


# Default monic irreducible (and primitive) modulus per (char, m), coefficients
# low-to-high.  Standard LFSR-table polynomials for char 2; small published
# primitive polynomials elsewhere.  Anything missing is found by deterministic
# search (smallest monic irreducible by integer code), so the table is a
# convention, not a requirement.  Every choice is re-verified at build time.
_DEFAULT_MODULUS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 0, 0, 1, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 1, 1),
    (7, 2): (3, 1, 1),
}

_SIZE_GUARD_BITS = 20


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    for f in range(2, int(math.isqrt(x)) + 1):
        if x % f == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """Immutable GF(q) context: tables plus scalar arithmetic.

    Safe to share across threads; every operation is pure.
    """

    characteristic: int
    m: int
    q: int
    n: int                      # multiplicative group order, q - 1
    modulus: tuple[int, ...]    # () when m == 1, else monic degree-m, low-to-high
    alpha: int                  # primitive element, order exactly n
    exp_table: tuple[int, ...]  # exp_table[i] = alpha^i, length n
    log_table: tuple[int, ...]  # log_table[e] = i with alpha^i = e; -1 at e = 0

    # --- element helpers -------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"element {a!r} out of range for GF({self.q})")
        return a

    def check_vector(self, v) -> list[int]:
        v = list(v)
        if len(v) != self.n:
            raise FieldError(f"vector length {len(v)} != n = {self.n}")
        for a in v:
            self.check(a)
        return v

    def elements(self):
        return range(self.q)

    # --- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.characteristic
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        r, mult = 0, 1
        while a or b:
            r += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return r

    def neg(self, a: int) -> int:
        p = self.characteristic
        if self.m == 1:
            return (p - a) % p
        if p == 2:
            return a
        r, mult = 0, 1
        while a:
            r += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % self.n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("division by zero")
        return self.exp_table[(self.n - self.log_table[a]) % self.n]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise FieldError("division by zero")
        if a == 0:
            return 0
        return self.exp_table[(self.log_table[a] - self.log_table[b]) % self.n]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1  # 0^0 = 1 convention used by the interpolation rows
            if e < 0:
                raise FieldError("zero has no negative powers")
            return 0
        return self.exp_table[(self.log_table[a] * e) % self.n]

    def alpha_pow(self, e: int) -> int:
        """alpha^e with any integer exponent (reduced mod n)."""
        return self.exp_table[e % self.n]

    def from_int(self, value: int) -> int:
        """Image of an ordinary integer under repeated addition of 1."""
        return value % self.characteristic

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return self.n // math.gcd(self.log_table[a], self.n)

    def __repr__(self) -> str:  # keep dataclass repr from dumping the tables
        return f"FieldCtx(GF({self.q}), alpha={self.alpha})"


# --- table-free polynomial arithmetic used only during construction ------


def _raw_mul(a: int, b: int, characteristic: int, m: int, modulus: tuple[int, ...]) -> int:
    if m == 1:
        return (a * b) % characteristic
    p = characteristic
    adigs = []
    while a:
        adigs.append(a % p)
        a //= p
    prod = [0] * (len(adigs) + m)
    i = 0
    bb = b
    while bb:
        d = bb % p
        if d:
            for j, ad in enumerate(adigs):
                prod[i + j] = (prod[i + j] + d * ad) % p
        bb //= p
        i += 1
    # reduce mod the monic modulus
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(m):
                prod[deg - m + j] = (prod[deg - m + j] - c * modulus[j]) % p
    code = 0
    for d in reversed(prod[:m]):
        code = code * p + d
    return code


def _modulus_is_irreducible(modulus: tuple[int, ...], p: int, m: int) -> bool:
    """Trial division by all monic polynomials of degree 1..m//2 over GF(p)."""
    for deg in range(1, m // 2 + 1):
        for tail in range(p**deg):
            div = []
            t = tail
            for _ in range(deg):
                div.append(t % p)
                t //= p
            div.append(1)
            # long-divide modulus by div, checking the remainder
            rem = list(modulus)
            for d in range(m, deg - 1, -1):
                c = rem[d]
                if c:
                    rem[d] = 0
                    for j in range(deg):
                        rem[d - deg + j] = (rem[d - deg + j] - c * div[j]) % p
            if not any(rem):
                return False
    return True


def _find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m by ascending coefficient code."""
    for tail in range(p**m):
        coeffs = []
        t = tail
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        if coeffs[0] == 0:  # reducible: divisible by x
            continue
        if _modulus_is_irreducible(tuple(coeffs), p, m):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # unreachable


def build_field(characteristic: int, m: int = 1, modulus=None) -> FieldCtx:
    """Construct GF(characteristic^m) with a verified primitive element.

    The primitive element is the smallest element code whose multiplicative
    order is exactly q - 1, found by direct powering.  If `modulus` is
    omitted for m > 1, a fixed table entry is used when available, otherwise
    the smallest irreducible polynomial is searched deterministically.
    """
    if not _is_prime(characteristic):
        raise FieldError(f"characteristic {characteristic} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if m * math.log2(characteristic) > _SIZE_GUARD_BITS:
        raise FieldError(f"field larger than 2^{_SIZE_GUARD_BITS} rejected")

    q = characteristic**m
    n = q - 1

    if m == 1:
        if modulus is not None and len(tuple(modulus)) > 0:
            raise FieldError("prime fields take no modulus")
        modulus = ()
    else:
        if modulus is None:
            modulus = _DEFAULT_MODULUS.get((characteristic, m)) or _find_irreducible(characteristic, m)
        modulus = tuple(int(c) % characteristic for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if not _modulus_is_irreducible(modulus, characteristic, m):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({characteristic})")

    # scan element codes in ascending order for the first one of order n,
    # building the exp table from its powers
    alpha = None
    exp: list[int] = []
    for cand in range(1, q):
        exp = [1]
        x = cand
        while x != 1 and len(exp) <= n:
            exp.append(x)
            x = _raw_mul(x, cand, characteristic, m, modulus)
        if len(exp) == n:
            alpha = cand
            break
    if alpha is None:
        raise FieldError("no primitive element found (modulus not irreducible?)")

    log = [-1] * q
    for i, e in enumerate(exp):
        log[e] = i

    return FieldCtx(
        characteristic=characteristic,
        m=m,
        q=q,
        n=n,
        modulus=modulus,
        alpha=alpha,
        exp_table=tuple(exp),
        log_table=tuple(log),
    )


def parse_field_spec(spec: str) -> FieldCtx:
    """Parse a field spec string like ``q=5``, ``q=2^4`` or ``q=2^4,mod=1,1,0,0,1``."""
    text = spec.strip()
    if not text.startswith("q="):
        raise FieldError(f"field spec must start with 'q=': {spec!r}")
    body = text[2:]
    modulus = None
    if ",mod=" in body:
        body, modpart = body.split(",mod=", 1)
        try:
            modulus = tuple(int(c) for c in modpart.split(","))
        except ValueError:
            raise FieldError(f"bad modulus coefficients in {spec!r}") from None
    if "^" in body:
        cpart, mpart = body.split("^", 1)
    else:
        cpart, mpart = body, "1"
    try:
        characteristic, m = int(cpart), int(mpart)
    except ValueError:
        raise FieldError(f"bad field spec {spec!r}") from None
    return build_field(characteristic, m, modulus)


def field_spec(ctx: FieldCtx) -> str:
    """Inverse of parse_field_spec (always spells out the modulus for m > 1)."""
    if ctx.m == 1:
        return f"q={ctx.characteristic}"
    return f"q={ctx.characteristic}^{ctx.m},mod=" + ",".join(str(c) for c in ctx.modulus)
