"""Block sums g(r) and block averages mu(r) of a 2-regular sequence.

With M = gamma(0) + gamma(1), the sum of the first 2^r terms is
g(r) = v M^r w, and the average over 2^r <= n < 2^(r+1) is
mu(r) = (g(r+1) - g(r)) / 2^r.  Both are computed exactly; only the
comparison against closed forms with irrational roots uses floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .linrep import MSD, LinearRepresentation, _EchelonBasis, dot, identity, matmul, vecmat


def block_matrix(R: LinearRepresentation):
    return tuple(
        tuple(a + b for a, b in zip(r0, r1)) for r0, r1 in zip(R.gamma0, R.gamma1)
    )


def block_sums(R: LinearRepresentation, r_max: int) -> list[Fraction]:
    """[g(0), ..., g(r_max)]."""
    if R.order != MSD:
        raise ValueError("block sums expect an MSD representation")
    M = block_matrix(R)
    out = []
    x = R.v
    for _ in range(r_max + 1):
        out.append(dot(x, R.w))
        x = vecmat(x, M)
    return out


def block_sum(R: LinearRepresentation, r: int) -> Fraction:
    if r < 0:
        raise ValueError("r must be nonnegative")
    return block_sums(R, r)[-1]


def block_average(R: LinearRepresentation, r: int) -> Fraction:
    g = block_sums(R, r + 1)
    return (g[r + 1] - g[r]) / 2**r


def block_averages(R: LinearRepresentation, r_max: int) -> list[Fraction]:
    g = block_sums(R, r_max + 1)
    return [(g[r + 1] - g[r]) / 2**r for r in range(r_max + 1)]


@dataclass(frozen=True)
class BlockStats:
    r: int
    g_r: Fraction
    mu_r: Fraction


def block_stats(R: LinearRepresentation, r_max: int) -> list[BlockStats]:
    g = block_sums(R, r_max + 1)
    return [BlockStats(r, g[r], (g[r + 1] - g[r]) / 2**r) for r in range(r_max + 1)]


def minimal_polynomial(R_or_M) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of M = gamma(0) + gamma(1), highest degree first.

    Accepts a representation or a square matrix. The first power M^k lying
    in the span of I, ..., M^(k-1) yields the relation; each power carries a
    tag block so the relation's coefficients fall out of the elimination.
    """
    M = block_matrix(R_or_M) if isinstance(R_or_M, LinearRepresentation) else R_or_M
    d = len(M)
    size = d * d
    basis = _EchelonBasis()
    P = identity(d)
    for k in range(d + 1):
        tag = [Fraction(0)] * (d + 1)
        tag[k] = Fraction(1)
        x = basis.reduce([e for row in P for e in row] + tag)
        if not any(x[:size]):
            rel = x[size:size + k + 1]
            return tuple(reversed(rel))
        basis.add(x)
        P = matmul(P, M)
    raise AssertionError("Cayley-Hamilton bound exceeded")


def poly_at_matrix(coeffs: Sequence, M):
    """Horner evaluation of a polynomial (highest degree first) at a square matrix."""
    d = len(M)
    acc = tuple(tuple(Fraction(0) for _ in range(d)) for _ in range(d))
    I = identity(d)
    for c in coeffs:
        acc = matmul(acc, M)
        acc = tuple(tuple(a + Fraction(c) * i for a, i in zip(ra, ri)) for ra, ri in zip(acc, I))
    return acc


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        p = deg - i
        mag = abs(c)
        body = "" if (mag == 1 and p > 0) else str(mag)
        if p == 1:
            body += var
        elif p > 1:
            body += f"{var}^{p}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def poly_roots(coeffs: Sequence) -> np.ndarray:
    return np.roots([float(c) for c in coeffs])


@dataclass
class ClosedFormReport:
    roots: list
    coefficients: list
    rows: list = field(default_factory=list)  # (r, exact mu, fitted mu, formula mu or None)
    max_rel_error: float = 0.0
    tol: float = 1e-9
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.max_rel_error <= self.tol


def verify_closed_form(
    R: LinearRepresentation,
    roots: Sequence[complex] | None = None,
    r_max: int = 20,
    tol: float = 1e-9,
    formula: Callable[[int], float] | None = None,
) -> ClosedFormReport:
    """Compare exact mu(r) against an exponential polynomial in the given roots.

    g(r) = sum_i c_i root_i^r with c_i fitted on g(0), ..., g(k-1); roots
    default to those of the minimal polynomial of M. When ``formula`` is
    given, it is checked against the exact mu(r) as well.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    if roots is None:
        roots = poly_roots(minimal_polynomial(R))
    roots = np.asarray(roots, dtype=complex)
    k = len(roots)
    report = ClosedFormReport(list(roots), [], tol=tol)
    if k > 1 and min(abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:]) < 1e-12:
        report.error = "roots are not pairwise distinct"
        return report
    g = block_sums(R, max(r_max + 1, k))
    V = np.array([[z**j for z in roots] for j in range(k)], dtype=complex)
    try:
        c = np.linalg.solve(V, np.array([float(x) for x in g[:k]], dtype=complex))
    except np.linalg.LinAlgError:
        report.error = "singular fit system"
        return report
    report.coefficients = list(c)

    def g_fit(r):
        return (c * roots**r).sum().real

    worst = 0.0
    for r in range(r_max + 1):
        exact = Fraction(g[r + 1] - g[r], 2**r)
        mu = float(exact)
        fitted = (g_fit(r + 1) - g_fit(r)) / 2**r
        formula_mu = formula(r) if formula is not None else None
        scale = abs(mu) if mu else 1.0
        errs = [abs(fitted - mu) / scale]
        if formula_mu is not None:
            errs.append(abs(formula_mu - mu) / scale)
        worst = max(worst, *errs)
        report.rows.append((r, exact, fitted, formula_mu))
    report.max_rel_error = worst
    return report


_R2, _R3, _R5 = math.sqrt(2), math.sqrt(3), math.sqrt(5)

# average-value closed forms for the order-1 fixtures, keyed by fixture name
CLOSED_FORMS: dict[str, Callable[[int], float]] = {
    "thm6": lambda r: ((1 + _R2) ** (r + 1) + (1 - _R2) ** (r + 1)) / 2 ** (r + 1),
    "thm7": lambda r: ((2 + _R3) * (1 + _R3) ** r + (2 - _R3) * (1 - _R3) ** r) / 2 ** (r + 1),
    "thm8": lambda r: ((1 + _R5) ** 2 * (3 + _R5) ** r - (1 - _R5) ** 2 * (3 - _R5) ** r)
    / (2 ** (2 * r + 2) * _R5),
    "thm9": lambda r: _R2 * ((1 + _R2) ** (r + 1) - (1 - _R2) ** (r + 1)) / 2 ** (r + 1),
    "thm10": lambda r: ((1 + _R5) * (3 + _R5) ** (r + 1) - (1 - _R5) * (3 - _R5) ** (r + 1))
    / (2 ** (2 * r + 2) * _R5),
}
