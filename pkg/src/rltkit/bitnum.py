"""Binary numerals, runs of 1's, and parity of binomial coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple


class SumSpec(NamedTuple):
    """Coefficients of T(n) = sum_k [binom(a1 n + a2 k, a3 n + a4 k) binom(n, k) mod 2]."""

    a1: int
    a2: int
    a3: int
    a4: int

    def check(self) -> "SumSpec":
        if self.a1 + self.a2 < 0 or self.a3 + self.a4 < 0:
            raise ValueError(
                f"need a1+a2 >= 0 and a3+a4 >= 0, got {tuple(self)}"
            )
        return self

    def __str__(self) -> str:
        return ",".join(str(a) for a in self)


@dataclass(frozen=True)
class BitWord:
    """A binary numeral, most significant digit first.

    The canonical numeral of 0 is the empty word.
    """

    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        v = 0
        for b in self.digits:
            v = 2 * v + b
        return v

    def lsd_first(self) -> tuple[int, ...]:
        return self.digits[::-1]

    def __str__(self) -> str:
        return "".join(map(str, self.digits))

    def __len__(self) -> int:
        return len(self.digits)


def to_bits(n: int) -> BitWord:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return BitWord(())
    return BitWord(tuple(int(c) for c in bin(n)[2:]))


def runs_of_ones(n: int) -> list[int]:
    """Lengths of the maximal runs of 1's in the numeral of ``n``, MSD-first."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    runs = []
    # bin(n) never carries leading zeros, so splitting on '0' gives the runs
    for chunk in bin(n)[2:].split("0"):
        if chunk:
            runs.append(len(chunk))
    return runs


def binom_parity(n: int, k: int) -> int:
    """binom(n, k) mod 2 by Lucas: k's bits must sit inside n's bits."""
    if n < 0 or k < 0:
        raise ValueError("binom_parity expects nonnegative arguments")
    return 1 if k & ~n == 0 else 0


def binom_parity_signed(x: int, y: int) -> int:
    """Like :func:`binom_parity`, but a negative argument gives 0."""
    if x < 0 or y < 0:
        return 0
    return 1 if y & ~x == 0 else 0


def submasks(n: int) -> Iterator[int]:
    """All k with k & ~n == 0, in decreasing order (ends with 0)."""
    k = n
    while True:
        yield k
        if k == 0:
            return
        k = (k - 1) & n


def sum_oracle(spec: SumSpec, n: int) -> int:
    """T(n) by direct summation over k.

    Terms with binom(n, k) even vanish, so only the submasks of n are
    visited; each surviving term is evaluated from the binomial parities.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    a1, a2, a3, a4 = spec
    b1, b3 = a1 * n, a3 * n
    total = 0
    k = n
    while True:
        # inlined binom_parity_signed(top, bottom) * binom_parity(n, k)
        top, bottom = b1 + a2 * k, b3 + a4 * k
        if top >= 0 and bottom >= 0 and bottom & ~top == 0 and k & ~n == 0:
            total += 1
        if k == 0:
            return total
        k = (k - 1) & n
