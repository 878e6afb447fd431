"""Generalized Baum-Sweet sequences.

T_m(n) = sum_k [binom(2^m k, n + k) binom(n, k) mod 2] is 1 exactly when
every run of 1's in the numeral of n has length divisible by m, and then a
single k contributes.
"""

from __future__ import annotations

from .bitnum import SumSpec, binom_parity, runs_of_ones, submasks
from .rlt import LinearRecurrence


def _check_m(m: int) -> int:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    return m


def tm_spec(m: int) -> SumSpec:
    """T_m as an instance of the general sum: binom(0 n + 2^m k, n + k)."""
    return SumSpec(0, 2 ** _check_m(m), 1, 1)


def odd_terms(m: int, n: int) -> list[int]:
    """All k <= n whose summand in T_m(n) is odd, increasing."""
    _check_m(m)
    # binom(n, k) is even unless k is a submask of n
    return sorted(k for k in submasks(n) if binom_parity((k << m), n + k))


def tm_sum(m: int, n: int) -> int:
    return len(odd_terms(m, n))


def tm_predicate(m: int, n: int) -> int:
    _check_m(m)
    return int(all(l % m == 0 for l in runs_of_ones(n)))


def tm_witness(m: int, n: int) -> int | None:
    """The unique contributing k, built run by run: 1^l becomes (0^(m-1) 1)^(l/m)."""
    if not tm_predicate(m, n):
        return None
    s = bin(n)[2:] if n else ""
    out = []
    i = 0
    while i < len(s):
        j = i
        while j < len(s) and s[j] == s[i]:
            j += 1
        if s[i] == "1":
            out.append(("0" * (m - 1) + "1") * ((j - i) // m))
        else:
            out.append("0" * (j - i))
        i = j
    return int("".join(out), 2) if out else 0


def tm_run_length_form(m: int) -> LinearRecurrence:
    """S_m: period 1 followed by m-1 zeros, i.e. S(n+1) = S(n-m+1)."""
    _check_m(m)
    return LinearRecurrence([0] * (m - 1) + [1], [1] + [0] * (m - 1))


def baum_sweet(n: int) -> int:
    """Classical Baum-Sweet: 1 iff every run of 0's in the numeral of n has even length."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return int(all(len(z) % 2 == 0 for z in bin(n)[2:].split("1")))
