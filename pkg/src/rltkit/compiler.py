"""SumSpec -> minimized MSD representation, plus the registry of known instances."""

from __future__ import annotations

from dataclasses import dataclass, field

from .automaton import compile_pair_automaton
from .bitnum import SumSpec, sum_oracle
from .linrep import (
    LinearRepresentation,
    counting_representation,
    equivalent,
    evaluate,
    minimize as _minimize,
    reverse,
)
from .rlt import LinearRecurrence, identify_rlt, normal_form, run_length_transform


def compile(spec, minimize: bool = True) -> LinearRepresentation:
    """MSD representation of T(n) for the given coefficients."""
    spec = SumSpec(*spec).check()
    R = reverse(counting_representation(compile_pair_automaton(spec)))
    return _minimize(R) if minimize else R


@dataclass(frozen=True)
class Fixture:
    name: str
    spec: SumSpec
    recurrence: LinearRecurrence
    rank: int
    title: str
    # (v, gamma0, gamma1, w) as printed for the theorem
    matrices: tuple | None = None
    oeis: str | None = None

    def representation(self) -> LinearRepresentation | None:
        if self.matrices is None:
            return None
        return LinearRepresentation(*self.matrices)


def _nf_matrices(w, bottom):
    """The printed quadruple: v = e1, gamma0 = [w 0 ... 0], companion gamma1."""
    d = len(w)
    v = [1] + [0] * (d - 1)
    g0 = [[c] + [0] * (d - 1) for c in w]
    g1 = [[int(j == i + 1) for j in range(d)] for i in range(d - 1)] + [list(bottom)]
    return (v, g0, g1, list(w))


_TABLE = [
    # name, spec, d0..dr, S(0..r), printed w, printed bottom row of gamma1, oeis, title
    ("thm6", (1, -1, 0, 2), (1, 1), (1, 1), (1, 1), (1, 1), "A000045",
     "Fibonacci numbers"),
    ("thm7", (0, 3, 0, 1), (1, 1), (1, 2), (1, 2), (1, 1), None,
     "truncated Fibonacci numbers"),
    ("thm8", (1, 0, 0, 2), (2, 0), (1, 1), (1, 1), (0, 2), "A000079",
     "1 followed by the positive powers of 2"),
    ("thm9", (1, 2, 0, 2), (1, 0), (1, 2), (1, 2), (0, 1), "A040000",
     "1 followed by 2's"),
    ("thm10", (1, 1, 1, -1), (2, -1), (1, 2), (1, 2), (-1, 2), "A000027",
     "positive integers"),
    ("thm14", (1, -1, 0, 6), (1, 0, 1), (1, 1, 1), (1, 1, 1), (1, 0, 1), "A000930",
     "Narayana's cows sequence"),
    ("thm15", (1, 3, 0, 6), (1, 1, -1), (1, 1, 2), (1, 1, 2), (-1, 1, 1), "A008619",
     "doubled positive integers"),
    ("thm17", (1, 2, 2, -1), (1, 1, 0, 0), (1, 1, 2, 1), (1, 1, 2, 1), (0, 0, 1, 1), "A329723",
     "Lucas numbers prepended with 1, 1"),
    ("rlt1", (1, 5, 2, 2), (1, 1, -1, 1), (1, 1, 1, 1), (1, 1, 1, 1), (1, -1, 1, 1), None,
     "1,1,1,1,2,3,5,7,11,16,25,..."),
    ("rlt2", (1, 5, 0, 2), (1, 1, -1, 1), (1, 2, 2, 3), (1, 2, 2, 3), (1, -1, 1, 1), None,
     "1,2,2,3,4,7,10,16,..."),
    ("rlt3", (-1, 7, 1, 1), (0, 1, 1), (1, 1, 1), (1, 1, 1), (1, 1, 0), "A000931",
     "Padovan numbers from offset 5"),
    ("rlt4", (1, 7, 3, 1), (0, 1, 1), (1, 0, 1), (1, 0, 1), (1, 1, 0), "A000931",
     "Padovan numbers from offset 3"),
    ("rlt5", (0, 6, 1, 3), (0, 2, 0, -1), (1, 1, 1, 2), (1, 1, 1, 2), (-1, 0, 2, 0), None,
     "1 alternating with the natural numbers"),
    ("rlt6", (-2, 8, 1, 1), (0, 0, 1), (1, 1, 0), (1, 1, 0), (1, 0, 0), None,
     "period 1,1,0"),
]


def fixtures() -> list[Fixture]:
    out = []
    for name, spec, d, init, w, bottom, oeis, title in _TABLE:
        out.append(Fixture(
            name=name,
            spec=SumSpec(*spec),
            recurrence=LinearRecurrence(d, init),
            rank=len(w),
            title=title,
            matrices=_nf_matrices(w, bottom),
            oeis=oeis,
        ))
    return out


def get_fixture(name: str) -> Fixture:
    for f in fixtures():
        if f.name == name:
            return f
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(f.name for f in fixtures())}")


def match_fixture(rec: LinearRecurrence) -> Fixture | None:
    """The fixture whose expected recurrence has the same normal form, if any."""
    nf = normal_form(rec)
    for f in fixtures():
        if normal_form(f.recurrence) == nf:
            return f
    return None


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class FixtureReport:
    fixture: Fixture
    checks: list[Check] = field(default_factory=list)
    identified: LinearRecurrence | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def __str__(self) -> str:
        lines = [f"{self.fixture.name} {tuple(self.fixture.spec)}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)


def verify_fixture(f: Fixture, bound: int = 4096) -> FixtureReport:
    """Run every consistency check for one fixture; failures go into the report."""
    if bound < 1:
        raise ValueError("bound must be positive")
    report = FixtureReport(f)
    R = compile(f.spec, minimize=True)

    mismatches = []
    for n in range(bound):
        a = sum_oracle(f.spec, n)
        b = run_length_transform(f.recurrence, n)
        c = evaluate(R, n)
        if not a == b == c:
            mismatches.append((n, a, b, c))
    report.add(
        f"oracle = RLT = representation for n < {bound}", not mismatches,
        f"{len(mismatches)} mismatches, first {mismatches[0]}" if mismatches else "",
    )
    report.add(f"minimized rank {f.rank}", R.rank == f.rank, f"got {R.rank}")

    printed = f.representation()
    if printed is not None:
        report.add("equivalent to printed matrices", equivalent(R, printed))

    rec = identify_rlt(R)
    if rec:
        report.identified = rec
        same = equivalent(normal_form(rec), normal_form(f.recurrence))
        report.add("identified recurrence", same, str(rec))
        if printed is not None:
            report.add("normal form equals printed matrices entrywise", normal_form(rec) == printed)
    else:
        report.add("identified recurrence", False, str(rec))
    return report
