"""Deterministic automata over (n-bit, k-bit) pairs.

Two kinds are built here: the two-state Lucas automaton that decides
whether binom(n, k) is odd, and carry automata that additionally track the
binary addition of the linear forms a1 n + a2 k and a3 n + a4 k, reading
least significant digits first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .bitnum import SumSpec

PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True, order=True)
class AutomatonState:
    carry1: int = 0
    carry2: int = 0
    alive: bool = True


DEAD = AutomatonState(0, 0, False)
START = AutomatonState(0, 0, True)


def _step(spec: SumSpec | None, s: AutomatonState, nb: int, kb: int) -> AutomatonState:
    if not s.alive or (kb and not nb):
        return DEAD
    if spec is None:
        return s
    a1, a2, a3, a4 = spec
    t1 = a1 * nb + a2 * kb + s.carry1
    t2 = a3 * nb + a4 * kb + s.carry2
    # bottom digit 1 over top digit 0 makes binom(top, bottom) even
    if (t2 & 1) and not (t1 & 1):
        return DEAD
    return AutomatonState(t1 >> 1, t2 >> 1, True)


class PairAutomaton:
    """Total deterministic automaton over digit pairs (n-bit, k-bit).

    ``states`` lists the reachable states in discovery order, starting with
    the initial state; the dead state is kept separately and is absorbing.
    """

    def __init__(self, spec: SumSpec | None, states, delta, bound: int):
        self.spec = spec
        self.states: tuple[AutomatonState, ...] = tuple(states)
        self.delta: dict[tuple[AutomatonState, int, int], AutomatonState] = delta
        self.bound = bound
        self.initial = START
        self.dead = DEAD

    def __repr__(self) -> str:
        return f"PairAutomaton(spec={self.spec}, live_states={len(self.states)})"

    def step(self, s: AutomatonState, nb: int, kb: int) -> AutomatonState:
        if not s.alive:
            return DEAD
        return self.delta[s, nb, kb]

    def run(self, pairs: Iterable[tuple[int, int]], start: AutomatonState | None = None) -> AutomatonState:
        s = self.initial if start is None else start
        for nb, kb in pairs:
            s = self.step(s, nb, kb)
        return s

    def accepts(self, pairs: Iterable[tuple[int, int]]) -> bool:
        return flush_accepts(self, self.run(pairs))


def lsd_pairs(n: int, k: int) -> list[tuple[int, int]]:
    """Digit pairs of (n, k), least significant first, padded to a common length."""
    length = max(n.bit_length(), k.bit_length())
    return [((n >> i) & 1, (k >> i) & 1) for i in range(length)]


def lucas_automaton() -> PairAutomaton:
    """The two-state automaton for binom(n, k) mod 2.

    It stays live until it reads n-bit 0 against k-bit 1. The digit order
    does not matter.
    """
    delta = {(START, nb, kb): _step(None, START, nb, kb) for nb, kb in PAIRS}
    return PairAutomaton(None, [START], delta, bound=0)


def carry_bound(spec: SumSpec) -> int:
    a1, a2, a3, a4 = spec
    return max(abs(a1) + abs(a2), abs(a3) + abs(a4)) + 1


def compile_pair_automaton(spec: SumSpec) -> PairAutomaton:
    """Carry automaton accepting (n, k) iff the summand for (n, k) is odd.

    Input is read LSD-first; acceptance is decided by :func:`flush_accepts`
    on the state reached after the last input pair.
    """
    spec = SumSpec(*spec).check()
    bound = carry_bound(spec)
    seen = {START}
    order = [START]
    delta = {}
    queue = deque([START])
    while queue:
        s = queue.popleft()
        for nb, kb in PAIRS:
            t = _step(spec, s, nb, kb)
            delta[s, nb, kb] = t
            if t.alive and t not in seen:
                if abs(t.carry1) > bound or abs(t.carry2) > bound:
                    raise AssertionError(f"carry escaped bound {bound}: {t}")
                seen.add(t)
                order.append(t)
                queue.append(t)
    return PairAutomaton(spec, order, delta, bound)


def flush_accepts(a: PairAutomaton, s: AutomatonState) -> bool:
    """Feed (0, 0) pairs until the carries settle; accept iff both settle at 0.

    A carry that settles at -1 means the linear form is negative, which
    contributes nothing.
    """
    while s.alive:
        if a.spec is None:
            return True
        t = _step(a.spec, s, 0, 0)
        if t == s:
            return s.carry1 == 0 and s.carry2 == 0
        s = t
    return False
