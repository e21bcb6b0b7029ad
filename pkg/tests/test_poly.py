"""Univariate polynomial helpers over GF(q)."""

import math

from gsrs import poly


def test_trim_and_deg():
    assert poly.trim([0, 1, 0, 0]) == [0, 1]
    assert poly.trim([0, 0]) == []
    assert poly.deg([]) == -1
    assert poly.deg([3]) == 0


def test_add_sub_roundtrip(gf5):
    f, g = [1, 2, 3], [4, 4]
    assert poly.sub(gf5, poly.add(gf5, f, g), g) == f


def test_mul_against_integer_oracle(gf7):
    # (1 + 2x)(3 + x + 4x^2) expanded over the integers, then reduced mod 7
    f, g = [1, 2], [3, 1, 4]
    expect = [0] * 4
    for i, a in enumerate([1, 2]):
        for j, b in enumerate([3, 1, 4]):
            expect[i + j] = (expect[i + j] + a * b) % 7
    assert poly.mul(gf7, f, g) == poly.trim(expect)


def test_mul_zero(gf5):
    assert poly.mul(gf5, [], [1, 2]) == []


def test_evaluate_horner(gf5):
    # 2 + 3x + x^2 at x=4: 2 + 12 + 16 = 30 = 0 mod 5
    assert poly.evaluate(gf5, [2, 3, 1], 4) == 0
    assert poly.evaluate(gf5, [], 3) == 0


def test_monic_from_roots(gf5):
    f = poly.monic_from_roots(gf5, [4, 2])  # (x-4)(x-2) = x^2 + 4x + 3 mod 5
    assert f == [3, 4, 1]
    assert poly.evaluate(gf5, f, 4) == 0
    assert poly.evaluate(gf5, f, 2) == 0


def test_pow(gf5):
    assert poly.pow_(gf5, [1, 1], 2) == [1, 2, 1]
    assert poly.pow_(gf5, [2, 1], 0) == [1]


def test_x_multiplicity():
    assert poly.x_multiplicity([0, 0, 3, 1]) == 2
    assert poly.x_multiplicity([5]) == 0
    assert poly.x_multiplicity([]) == 0


def test_binom_mod_matches_math_comb():
    for p in (2, 3, 5, 7):
        for n in range(12):
            for k in range(n + 2):
                expect = math.comb(n, k) % p if k <= n else 0
                assert poly.binom_mod(n, k, p) == expect
