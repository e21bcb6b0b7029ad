"""Field construction and arithmetic, exhaustive at small sizes."""

import itertools
import random

import pytest

from gsrs.field import FieldError, build_field, field_spec, parse_field_spec


def test_gf5_construction(gf5):
    assert (gf5.q, gf5.n, gf5.alpha) == (5, 4, 2)
    # smallest primitive root mod 5: direct powering oracle
    powers = {pow(2, e, 5) for e in range(4)}
    assert powers == {1, 2, 3, 4}


def test_gf2_trivial():
    ctx = build_field(2)
    assert (ctx.q, ctx.n, ctx.alpha) == (2, 1, 1)
    assert ctx.exp_table == (1,)


def test_gf16_alpha_is_x(gf16):
    assert gf16.alpha == 2
    # direct powering oracle under x^4 + x + 1: order of "x" is exactly 15
    def raw_mul(a, b):
        prod = 0
        while b:
            if b & 1:
                prod ^= a
            b >>= 1
            a <<= 1
            if a & 16:
                a ^= 0b10011
        return prod
    x, order = 2, 1
    while x != 1 or order == 1:
        x = raw_mul(x, 2)
        order += 1
        assert order <= 15
        if x == 1:
            break
    assert order == 15


@pytest.mark.parametrize("a,b,expected", [(2, 4, 1), (0, 0, 0), (4, 4, 3)])
def test_gf5_add(gf5, a, b, expected):
    assert gf5.add(a, b) == expected


def test_gf5_inv(gf5):
    assert gf5.inv(4) == 4  # 4*4 = 16 = 1 mod 5
    assert gf5.mul(2, gf5.inv(2)) == 1


def test_gf16_mul_example(gf16):
    assert gf16.mul(8, 2) == 3  # x^3 * x = x^4 = x + 1


def test_pow_conventions(gf5):
    assert gf5.pow(0, 0) == 1
    assert gf5.pow(0, 3) == 0
    assert gf5.pow(3, -1) == gf5.inv(3)
    assert gf5.pow(2, 4) == 1  # Lagrange
    with pytest.raises(FieldError):
        gf5.pow(0, -1)


@pytest.mark.parametrize("char,m", [(5, 1), (7, 1), (2, 4), (3, 2)])
def test_inverse_exhaustive(char, m):
    ctx = build_field(char, m)
    for a in range(1, ctx.q):
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.div(1, a) == ctx.inv(a)


def test_inverse_exhaustive_gf256():
    ctx = build_field(2, 8)
    for a in range(1, 256):
        assert ctx.mul(a, ctx.inv(a)) == 1


@pytest.mark.parametrize("char,m", [(5, 1), (2, 4)])
def test_distributivity_exhaustive_small(char, m):
    ctx = build_field(char, m)
    for a, b, c in itertools.product(range(ctx.q), repeat=3):
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_distributivity_randomized_gf256():
    ctx = build_field(2, 8)
    rng = random.Random(3)
    for _ in range(500):
        a, b, c = (rng.randrange(256) for _ in range(3))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_exp_log_round_trip(gf16):
    for a in range(1, 16):
        assert gf16.exp_table[gf16.log_table[a]] == a
    n = gf16.n
    for i in range(n):
        for j in range(n):
            assert gf16.mul(gf16.exp_table[i], gf16.exp_table[j]) == gf16.exp_table[(i + j) % n]


def test_lagrange_exhaustive(gf7):
    for a in range(1, 7):
        assert gf7.pow(a, gf7.n) == 1


def test_division_by_zero(gf5):
    with pytest.raises(FieldError):
        gf5.inv(0)
    with pytest.raises(FieldError):
        gf5.div(3, 0)


def test_rejects_bad_fields():
    with pytest.raises(FieldError):
        build_field(4)  # not prime
    with pytest.raises(FieldError):
        build_field(2, 4, (1, 0, 0, 0, 1))  # x^4 + 1 = (x+1)^4 over GF(2)
    with pytest.raises(FieldError):
        build_field(2, 25)  # over the size guard
    with pytest.raises(FieldError):
        build_field(2, 0)


def test_default_modulus_table_and_search():
    assert build_field(2, 4).modulus == (1, 1, 0, 0, 1)
    ctx = build_field(11, 2)  # not in the table: deterministic search
    assert ctx.q == 121 and len(ctx.modulus) == 3 and ctx.modulus[-1] == 1


def test_field_spec_round_trip(gf16):
    ctx = parse_field_spec("q=2^4,mod=1,1,0,0,1")
    assert (ctx.q, ctx.alpha, ctx.modulus) == (gf16.q, gf16.alpha, gf16.modulus)
    assert parse_field_spec("q=5").q == 5
    assert parse_field_spec(field_spec(gf16)).modulus == gf16.modulus
    with pytest.raises(FieldError):
        parse_field_spec("5")
    with pytest.raises(FieldError):
        parse_field_spec("q=2^4,mod=x")
