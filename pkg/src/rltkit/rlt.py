"""Run length transforms of linear recurrence sequences.

The run length transform of S is T(n) = prod S(l), the product taken over
the lengths l of the maximal runs of 1's in the binary numeral of n.  When S
satisfies a linear recurrence, T has a linear representation in a fixed
companion shape; :func:`normal_form` builds it and :func:`identify_rlt` goes
the other way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .bitnum import runs_of_ones
from .linrep import MSD, LinearRepresentation, equivalent, evaluate


class NoRecurrenceError(ValueError):
    pass


def _exact(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class LinearRecurrence:
    """S(n+1) = d0 S(n) + d1 S(n-1) + ... + dr S(n-r), for n >= r.

    ``coefficients`` is (d0, ..., dr) and ``initial`` is (S(0), ..., S(r)).
    """

    coefficients: tuple
    initial: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(_exact(d) for d in self.coefficients))
        object.__setattr__(self, "initial", tuple(_exact(c) for c in self.initial))
        if not self.coefficients:
            raise ValueError("a recurrence needs at least one coefficient")
        if len(self.initial) != len(self.coefficients):
            raise ValueError(
                f"order {self.order} needs {self.order + 1} initial values, got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for i, d in enumerate(self.coefficients):
            if d == 0:
                continue
            mag = abs(d)
            sign = "-" if d < 0 else "+"
            coef = "" if mag == 1 else f"{mag}"
            terms.append((sign, f"{coef}S(n-{i + 1})"))
        if not terms:
            rhs = "0"
        else:
            rhs = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            rhs += "".join(f"{s}{t}" for s, t in terms[1:])
        init = ",".join(str(c) for c in self.initial)
        return f"S(n)={rhs}; {init}"


def recurrence_terms(rec: LinearRecurrence, count: int) -> list:
    if count < 1:
        raise ValueError("count must be positive")
    terms = list(rec.initial[:count])
    d = rec.coefficients
    while len(terms) < count:
        terms.append(sum(di * terms[-1 - i] for i, di in enumerate(d)))
    return terms


def run_length_transform(rec: LinearRecurrence, n: int) -> int:
    runs = runs_of_ones(n)
    if not runs:
        return 1
    S = recurrence_terms(rec, max(runs) + 1)
    return prod(S[l] for l in runs)


def normal_form(rec: LinearRecurrence) -> LinearRepresentation:
    """Companion-shaped MSD representation of the run length transform of ``rec``."""
    if rec.initial[0] != 1:
        raise ValueError(f"S(0) must be 1, got {rec.initial[0]}")
    d = rec.order + 1
    w = list(rec.initial)
    v = [1] + [0] * (d - 1)
    g0 = [[c] + [0] * (d - 1) for c in w]
    g1 = [[int(j == i + 1) for j in range(d)] for i in range(d - 1)]
    g1.append(list(reversed(rec.coefficients)))
    return LinearRepresentation(v, g0, g1, w, MSD)


def berlekamp_massey(terms: Sequence) -> list[Fraction]:
    """Shortest (c1, ..., cL) with s[n] = c1 s[n-1] + ... + cL s[n-L] for L <= n < len(terms).

    Raises :class:`NoRecurrenceError` when the shortest such recurrence has
    2L > len(terms), i.e. the prefix does not pin one down.
    """
    s = [Fraction(t) for t in terms]
    C = [Fraction(1)]  # connection polynomial 1 - c1 x - ... - cL x^L
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        delta = s[n] + sum(C[i] * s[n - i] for i in range(1, L + 1))
        if delta == 0:
            m += 1
            continue
        coef = delta / b
        T = C[:]
        C = C + [Fraction(0)] * (len(B) + m - len(C))
        for i, bi in enumerate(B):
            C[i + m] -= coef * bi
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, delta, 1
        else:
            m += 1
    if 2 * L > len(s):
        raise NoRecurrenceError(f"no recurrence of order <= {len(s) // 2} fits {len(s)} terms")
    C = C + [Fraction(0)] * (L + 1 - len(C))
    return [-C[i] for i in range(1, L + 1)]


@dataclass
class NotAnRLT:
    """Why a representation could not be identified as a run length transform."""

    reason: str
    probes: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"not a run length transform: {self.reason}"


def identify_rlt(R: LinearRepresentation) -> LinearRecurrence | NotAnRLT:
    """Recover S from T(2^l - 1) = S(l) and confirm T is its run length transform."""
    if R.order != MSD:
        raise ValueError("identify_rlt expects an MSD representation")
    probes = [evaluate(R, (1 << l) - 1) for l in range(2 * R.rank + 4)]
    if probes[0] != 1:
        return NotAnRLT(f"S(0) = {probes[0]}, expected 1", probes)
    try:
        c = berlekamp_massey(probes)
    except NoRecurrenceError as e:
        return NotAnRLT(str(e), probes)
    if not c:
        return NotAnRLT("probe sequence is identically zero", probes)
    rec = LinearRecurrence(c, probes[: len(c)])
    if not equivalent(R, normal_form(rec)):
        return NotAnRLT(f"{rec} matches the probes but not the representation", probes)
    return rec
