"""Transforms: frozen examples from direct-summation oracles plus round trips."""

import itertools
import random

import pytest

from gsrs.field import FieldError
from gsrs.linalg import gf_matvec
from gsrs.spectral import cyclic_convolution, dft, dft_matrix, idft, idft_matrix


def oracle_dft(ctx, v):
    """Independent direct summation, element-power oracle."""
    out = []
    for j in range(ctx.n):
        acc = 0
        for i in range(ctx.n):
            acc = ctx.add(acc, ctx.mul(v[i], ctx.pow(ctx.alpha, (j * i) % ctx.n)))
        out.append(acc)
    return out


def oracle_idft(ctx, big_v):
    n_inv = ctx.inv(ctx.from_int(ctx.n))
    out = []
    for j in range(ctx.n):
        acc = 0
        for i in range(ctx.n):
            acc = ctx.add(acc, ctx.mul(big_v[i], ctx.inv(ctx.pow(ctx.alpha, (j * i) % ctx.n))))
        out.append(ctx.mul(n_inv, acc))
    return out


def test_dft_zero_and_impulse(gf5):
    assert dft(gf5, [0, 0, 0, 0]) == [0, 0, 0, 0]
    assert dft(gf5, [1, 0, 0, 0]) == [1, 1, 1, 1]


def test_dft_frozen_example(gf5):
    assert oracle_dft(gf5, [3, 1, 1, 2]) == [2, 0, 1, 4]
    assert dft(gf5, [3, 1, 1, 2]) == [2, 0, 1, 4]


def test_idft_geometric_series(gf5):
    assert idft(gf5, [1, 1, 1, 1]) == [1, 0, 0, 0]


@pytest.mark.parametrize("spectrum,expected", [
    ([1, 1, 0, 0], [3, 1, 0, 2]),
    ([1, 4, 1, 4], [0, 0, 1, 0]),
])
def test_idft_frozen_examples(gf5, spectrum, expected):
    assert oracle_idft(gf5, spectrum) == expected
    assert idft(gf5, spectrum) == expected


def test_round_trip_exhaustive_gf5(gf5):
    for v in itertools.product(range(5), repeat=4):
        v = list(v)
        assert idft(gf5, dft(gf5, v)) == v
        assert dft(gf5, idft(gf5, v)) == v


def test_round_trip_randomized_gf16(gf16):
    rng = random.Random(5)
    for _ in range(50):
        v = [rng.randrange(16) for _ in range(15)]
        assert idft(gf16, dft(gf16, v)) == v


def test_length_mismatch(gf5):
    with pytest.raises(FieldError):
        dft(gf5, [1, 2, 3])
    with pytest.raises(FieldError):
        idft(gf5, [1, 2, 3, 4, 0])


def oracle_convolution(ctx, big_v, big_w):
    """Independent double-sum oracle."""
    n = ctx.n
    return [
        _sum_field(ctx, (ctx.mul(big_v[(j - i) % n], big_w[i]) for i in range(n)))
        for j in range(n)
    ]


def _sum_field(ctx, values):
    acc = 0
    for v in values:
        acc = ctx.add(acc, v)
    return acc


def test_convolution_identity(gf5):
    impulse = [1, 0, 0, 0]
    for v in ([1, 2, 3, 4], [0, 4, 4, 0]):
        assert cyclic_convolution(gf5, v, impulse) == v


def test_convolution_frozen_example(gf5):
    assert oracle_convolution(gf5, [1, 0, 1, 0], [1, 1, 0, 0]) == [1, 1, 1, 1]
    assert cyclic_convolution(gf5, [1, 0, 1, 0], [1, 1, 0, 0]) == [1, 1, 1, 1]


def test_convolution_preserves_periodicity(gf7):
    # 2-periodic convolved with anything stays 2-periodic (and p=3 likewise)
    rng = random.Random(9)
    for p in (1, 2, 3):
        for _ in range(20):
            template = [rng.randrange(7) for _ in range(p)]
            periodic = template * (6 // p)
            other = [rng.randrange(7) for _ in range(6)]
            u = cyclic_convolution(gf7, periodic, other)
            assert u == u[:p] * (6 // p)


def test_product_convolution_normalization(gf5, gf7):
    # dft(v .* w) == n^-1 * conv(dft v, dft w), the normalization fixed in the docs
    for ctx in (gf5, gf7):
        rng = random.Random(13)
        n_inv = ctx.inv(ctx.from_int(ctx.n))
        for _ in range(20):
            v = [rng.randrange(ctx.q) for _ in range(ctx.n)]
            w = [rng.randrange(ctx.q) for _ in range(ctx.n)]
            lhs = dft(ctx, [ctx.mul(a, b) for a, b in zip(v, w)])
            conv = cyclic_convolution(ctx, dft(ctx, v), dft(ctx, w))
            assert lhs == [ctx.mul(n_inv, u) for u in conv]


def test_matrix_form_consistency(gf5):
    d = dft_matrix(gf5)
    e = idft_matrix(gf5)
    for v in ([1, 0, 0, 0], [3, 1, 1, 2], [4, 4, 4, 4]):
        assert gf_matvec(d, v, gf5) == dft(gf5, v)
        assert gf_matvec(e, dft(gf5, v), gf5) == v
