"""Linear representations (v, gamma(0), gamma(1), w) over the rationals.

Everything here is exact: entries are :class:`fractions.Fraction` and
no floating point is involved.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .automaton import PAIRS, PairAutomaton, flush_accepts
from .bitnum import to_bits

MSD = "msd"
LSD = "lsd"

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def _vec(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _mat(rows) -> Matrix:
    return tuple(_vec(r) for r in rows)


def vecmat(x: Sequence, m: Matrix) -> Vector:
    d = len(m[0]) if m else 0
    out = [Fraction(0)] * d
    for xi, row in zip(x, m):
        if xi:
            for j, mij in enumerate(row):
                if mij:
                    out[j] += xi * mij
    return tuple(out)


def matvec(m: Matrix, x: Sequence) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, x) if a and b), Fraction(0)) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vecmat(row, b) for row in a)


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(x, y) if a and b), Fraction(0))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def identity(d: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by Gaussian elimination."""
    basis = _EchelonBasis()
    for r in rows:
        basis.add(r)
    return len(basis)


class _EchelonBasis:
    """Rows kept in reduced row echelon form.

    Every stored row has a pivot entry equal to 1 and zeros at the pivots of
    all other rows, so the coordinates of a vector in the span are its
    entries at the pivot columns.
    """

    def __init__(self):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, x: Sequence) -> list[Fraction]:
        x = [Fraction(t) for t in x]
        for row, p in zip(self.rows, self.pivots):
            c = x[p]
            if c:
                for j, rj in enumerate(row):
                    if rj:
                        x[j] -= c * rj
        return x

    def add(self, x: Sequence) -> bool:
        """Insert x if it is outside the span; report whether it was new."""
        x = self.reduce(x)
        p = next((j for j, t in enumerate(x) if t), None)
        if p is None:
            return False
        inv = 1 / x[p]
        x = [t * inv for t in x]
        for row in self.rows:
            c = row[p]
            if c:
                for j, xj in enumerate(x):
                    if xj:
                        row[j] -= c * xj
        self.rows.append(x)
        self.pivots.append(p)
        return True

    def coordinates(self, x: Sequence) -> Vector:
        return tuple(Fraction(x[p]) for p in self.pivots)


@dataclass(frozen=True)
class LinearRepresentation:
    """a(n) = v gamma(digits of n) w, with digits read in ``order``.

    For ``order == "msd"`` the matrix product runs over the canonical
    numeral from its most significant digit; for ``"lsd"`` it runs from the
    least significant one.
    """

    v: Vector
    gamma0: Matrix
    gamma1: Matrix
    w: Vector
    order: str = MSD

    def __post_init__(self):
        object.__setattr__(self, "v", _vec(self.v))
        object.__setattr__(self, "w", _vec(self.w))
        object.__setattr__(self, "gamma0", _mat(self.gamma0))
        object.__setattr__(self, "gamma1", _mat(self.gamma1))
        d = len(self.v)
        if d < 1:
            raise ValueError("rank must be positive")
        if len(self.w) != d:
            raise ValueError(f"w has length {len(self.w)}, expected {d}")
        for name in ("gamma0", "gamma1"):
            m = getattr(self, name)
            if len(m) != d or any(len(row) != d for row in m):
                raise ValueError(f"{name} must be {d}x{d}")
        if self.order not in (MSD, LSD):
            raise ValueError(f"order must be 'msd' or 'lsd', got {self.order!r}")

    @property
    def rank(self) -> int:
        return len(self.v)

    def gamma(self, bit: int) -> Matrix:
        return self.gamma1 if bit else self.gamma0

    def word_value(self, word: Sequence[int]) -> Fraction:
        """v gamma(word[0]) gamma(word[1]) ... w, regardless of reading order."""
        x = self.v
        for b in word:
            x = vecmat(x, self.gamma(b))
        return dot(x, self.w)

    def __call__(self, n: int) -> Fraction:
        return evaluate(self, n)


def evaluate(R: LinearRepresentation, n: int) -> Fraction:
    digits = to_bits(n).digits
    if R.order == LSD:
        digits = digits[::-1]
    return R.word_value(digits)


def counting_representation(a: PairAutomaton) -> LinearRepresentation:
    """LSD representation counting the k accepted alongside each n.

    gamma(b)[s, t] is the number of k-digits e with s --(b, e)--> t among
    live states; w marks the states that accept after flushing.
    """
    index = {s: i for i, s in enumerate(a.states)}
    d = len(index)
    g = {b: [[0] * d for _ in range(d)] for b in (0, 1)}
    for s, i in index.items():
        for nb, kb in PAIRS:
            t = a.step(s, nb, kb)
            if t.alive:
                g[nb][i][index[t]] += 1
    v = [0] * d
    v[index[a.initial]] = 1
    w = [int(flush_accepts(a, s)) for s in a.states]
    return LinearRepresentation(v, g[0], g[1], w, order=LSD)


def reverse(R: LinearRepresentation) -> LinearRepresentation:
    order = LSD if R.order == MSD else MSD
    return LinearRepresentation(R.w, transpose(R.gamma0), transpose(R.gamma1), R.v, order)


def _left_reduce(R: LinearRepresentation) -> LinearRepresentation:
    """Restrict R to the span of {v gamma(x)}."""
    basis = _EchelonBasis()
    basis.add(R.v)
    i = 0
    while i < len(basis):
        # rows may be rewritten by later insertions; the span stays closed
        u = tuple(basis.rows[i])
        for g in (R.gamma0, R.gamma1):
            basis.add(vecmat(u, g))
        i += 1
    rows = [tuple(r) for r in basis.rows]
    g0 = [basis.coordinates(vecmat(r, R.gamma0)) for r in rows]
    g1 = [basis.coordinates(vecmat(r, R.gamma1)) for r in rows]
    v = basis.coordinates(R.v)
    w = [dot(r, R.w) for r in rows]
    return LinearRepresentation(v, g0, g1, w, R.order)


def _transposed(R: LinearRepresentation) -> LinearRepresentation:
    return LinearRepresentation(R.w, transpose(R.gamma0), transpose(R.gamma1), R.v, R.order)


def minimize(R: LinearRepresentation) -> LinearRepresentation:
    """Equivalent representation of minimal rank.

    Reduce to the reachable space {v gamma(x)}, then to the observable space
    {gamma(x) w} of the result. A representation of the zero series comes
    back as the rank-1 zero representation.
    """
    if not any(R.v) or not any(R.w):
        return _zero(1, R.order)
    left = _left_reduce(R)
    right = _transposed(_left_reduce(_transposed(left)))
    if not any(right.w):
        return _zero(1, R.order)
    return right


def _zero(d: int, order: str) -> LinearRepresentation:
    z = [[0] * d for _ in range(d)]
    return LinearRepresentation([0] * d, z, z, [0] * d, order)


def linear_combination(c1, R1: LinearRepresentation, c2, R2: LinearRepresentation) -> LinearRepresentation:
    """Block-diagonal sum evaluating to c1 R1(n) + c2 R2(n)."""
    if R1.order != R2.order:
        raise ValueError("representations must share a reading order")
    d1, d2 = R1.rank, R2.rank

    def block(a, b):
        return [list(r) + [0] * d2 for r in a] + [[0] * d1 + list(r) for r in b]

    c1, c2 = Fraction(c1), Fraction(c2)
    v = [c1 * x for x in R1.v] + [c2 * x for x in R2.v]
    return LinearRepresentation(
        v, block(R1.gamma0, R2.gamma0), block(R1.gamma1, R2.gamma1),
        list(R1.w) + list(R2.w), R1.order,
    )


def equivalent(R1: LinearRepresentation, R2: LinearRepresentation) -> bool:
    """Exact test that R1 and R2 define the same series on all digit words.

    The difference D = R1 - R2 vanishes iff v_D gamma(x) w_D = 0 for every
    word x of length below rank(D); a spanning set of those row vectors is
    built breadth-first, so only words that enlarge the span are expanded.
    """
    if R1.order != R2.order:
        R2 = reverse(R2)
    D = linear_combination(1, R1, -1, R2)
    basis = _EchelonBasis()
    frontier = deque([D.v])
    while frontier:
        u = frontier.popleft()
        if dot(u, D.w) != 0:
            return False
        if basis.add(u):
            frontier.append(vecmat(u, D.gamma0))
            frontier.append(vecmat(u, D.gamma1))
    return True


def equivalent_bruteforce(R1: LinearRepresentation, R2: LinearRepresentation) -> bool:
    """Agreement on every digit word shorter than rank(R1) + rank(R2)."""
    if R1.order != R2.order:
        R2 = reverse(R2)
    bound = R1.rank + R2.rank
    for length in range(bound):
        for word in product((0, 1), repeat=length):
            if R1.word_value(word) != R2.word_value(word):
                return False
    return True


def hankel_rank(R: LinearRepresentation, length: int) -> int:
    """Rank of the Hankel block with rows and columns indexed by words shorter than ``length``."""
    words = [w for k in range(length) for w in product((0, 1), repeat=k)]
    return matrix_rank([[R.word_value(x + y) for y in words] for x in words])
