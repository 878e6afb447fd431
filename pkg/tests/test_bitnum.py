from math import comb

import pytest
from hypothesis import given, strategies as st

from rltkit.bitnum import (
    BitWord, SumSpec, binom_parity, binom_parity_signed, runs_of_ones, submasks, sum_oracle, to_bits,
)
from oracles import binom_mod2_factorial, naive_sum, scan_runs


def test_to_bits_examples():
    assert to_bits(0) == BitWord(())
    assert str(to_bits(11)) == "1011"
    assert to_bits(12).digits == (1, 1, 0, 0)


def test_to_bits_roundtrip():
    for n in range(1 << 20):
        assert to_bits(n).value == n
    assert to_bits(1 << 20).value == 1 << 20


def test_to_bits_rejects_negative():
    with pytest.raises(ValueError):
        to_bits(-1)


@given(st.integers(min_value=1, max_value=2**200))
def test_canonical_has_no_leading_zero(n):
    w = to_bits(n)
    assert w.digits[0] == 1
    assert w.lsd_first()[::-1] == w.digits


def test_runs_examples():
    assert runs_of_ones(11) == [1, 2]
    assert runs_of_ones(0) == []
    assert 0b11100110111 == 1847
    assert runs_of_ones(1847) == [3, 2, 3] == scan_runs(1847)


def test_runs_exhaustive():
    for n in range(1 << 16):
        runs = runs_of_ones(n)
        assert sum(runs) == bin(n).count("1")
        assert all(l >= 1 for l in runs)
        assert (runs == []) == (n == 0)
        if n < 4096:
            assert runs == scan_runs(n)


@pytest.mark.parametrize("n,k,expected", [(5, 4, 1), (5, 2, 0), (0, 0, 1), (9, 0, 1), (3, 5, 0)])
def test_binom_parity_examples(n, k, expected):
    assert binom_parity(n, k) == expected


def test_binom_parity_exhaustive():
    for n in range(513):
        for k in range(n + 1):
            assert binom_parity(n, k) == binom_mod2_factorial(n, k)
        assert binom_parity(n, n + 1) == 0


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_odd_binomial_forces_k_le_n(n, k):
    if binom_parity(n, k):
        assert k <= n


@pytest.mark.parametrize("x,y,expected", [(-1, 2, 0), (4, 4, 1), (8, 5, 0), (3, -1, 0), (-2, -2, 0)])
def test_binom_parity_signed(x, y, expected):
    assert binom_parity_signed(x, y) == expected


def test_binom_parity_signed_matches_comb():
    assert comb(8, 5) == 56
    for x in range(-5, 40):
        for y in range(-5, 40):
            want = 0 if x < 0 or y < 0 else comb(x, y) % 2
            assert binom_parity_signed(x, y) == want


def test_submasks():
    assert sorted(submasks(0b1010)) == [0, 2, 8, 10]
    assert list(submasks(0)) == [0]


def test_sum_oracle_examples():
    fib = SumSpec(1, -1, 0, 2)
    assert sum_oracle(fib, 7) == 3
    assert sum_oracle(fib, 0) == 1
    assert sum_oracle(SumSpec(1, 2, 0, 2), 1) == 2


def test_sum_oracle_matches_full_summation(all_fixtures):
    for f in all_fixtures:
        for n in range(200):
            assert sum_oracle(f.spec, n) == naive_sum(f.spec, n), (f.name, n)


def test_sumspec_check():
    assert SumSpec(1, -1, 0, 2).check() == (1, -1, 0, 2)
    with pytest.raises(ValueError):
        SumSpec(1, -3, 0, 1).check()
    with pytest.raises(ValueError):
        SumSpec(0, 0, 1, -2).check()
