"""Identity suites run by ``chebkit verify``.

Each suite returns a :class:`SuiteResult` with the largest deviation it saw.
Exact suites report deviation as the largest absolute rational coefficient
mismatch (0 means the identity holds exactly).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .approx import cheb_coefficients, parseval_gap
from .core import (
    chebyshev_T,
    general_solution_residual,
    generating_closed,
    generating_coefficients,
    generating_partial,
    eval_trig,
    ode_residual,
    poly_parity,
    Parity,
    rodrigues,
    second_kind_residual,
)
from .poly import Poly
from .quadrature import gauss_chebyshev, integrate_weighted
from .targets import PolyTarget, preset


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: max_deviation={self.max_deviation:.3e} tol={self.tolerance:.1e}"


def _maxabs(p: Poly) -> float:
    return float(max((abs(c) for c in p.coeffs), default=Fraction(0)))


def _exact(name: str, residuals: Sequence[Poly]) -> SuiteResult:
    dev = max((_maxabs(r) for r in residuals), default=0.0)
    return SuiteResult(name, all(r.is_zero() for r in residuals), dev, 0.0)


def build_table(nmax: int) -> list[Poly]:
    return [chebyshev_T(n) for n in range(nmax + 1)]


def suite_recurrence(table: Sequence[Poly]) -> SuiteResult:
    x = Poly.x()
    res = [table[n + 1] - (2 * x * table[n] - table[n - 1]) for n in range(1, len(table) - 1)]
    # anchor the base cases too, otherwise a consistently wrong table passes
    res += [table[0] - Poly.one(), table[1] - x]
    return _exact("recurrence", res)


def suite_ode(table: Sequence[Poly]) -> SuiteResult:
    res = [ode_residual(n, t) for n, t in enumerate(table)]
    res += [second_kind_residual(n) for n in range(1, min(len(table), 16))]
    return _exact("ode_residual", res)


def suite_rodrigues(table: Sequence[Poly], nmax: int = 12) -> SuiteResult:
    return _exact("rodrigues", [rodrigues(n) - table[n] for n in range(min(nmax, len(table) - 1) + 1)])


def suite_parity(table: Sequence[Poly]) -> SuiteResult:
    bad = 0.0
    ok = True
    samples = [Fraction(k, 7) for k in range(-7, 8)]
    for n, t in enumerate(table):
        want = Parity.EVEN if n % 2 == 0 else Parity.ODD
        ok &= poly_parity(t) is want
        sign = 1 if n % 2 == 0 else -1
        for s in samples:
            d = abs(t(-s) - sign * t(s))
            ok &= d == 0
            bad = max(bad, float(d))
    return SuiteResult("parity", ok, bad, 0.0)


def suite_endpoints(table: Sequence[Poly]) -> SuiteResult:
    dev = Fraction(0)
    for n, t in enumerate(table):
        dev = max(dev, abs(t(1) - 1), abs(t(-1) - (-1) ** n))
    return SuiteResult("endpoints", dev == 0, float(dev), 0.0)


def suite_trig(table: Sequence[Poly], nmax: int = 20, points: int = 200) -> SuiteResult:
    """cos(n arccos x) against the exact polynomial value, plus |T_n| <= 1."""
    xs = [Fraction(float(v)) for v in np.linspace(-1.0, 1.0, points)]
    dev = 0.0
    for n in range(min(nmax, len(table) - 1) + 1):
        exact = np.array([float(table[n](x)) for x in xs])
        dev = max(dev, float(np.max(np.abs(eval_trig(n, np.array([float(x) for x in xs])) - exact))))
    grid = [Fraction(k, 200) for k in range(-200, 201)]
    bounded = all(abs(t(x)) <= 1 for t in table for x in grid)
    tol = 1e-11
    return SuiteResult("trig_form", dev <= tol and bounded, dev, tol)


def suite_generating(nterms: int = 40, grid: int = 21, zmax: float = 0.5) -> SuiteResult:
    tol = zmax ** (nterms + 1) / (1 - zmax)
    xs = np.linspace(-1.0, 1.0, grid)
    zs = np.linspace(-zmax, zmax, grid)
    X, Z = np.meshgrid(xs, zs)
    dev = float(np.max(np.abs(generating_closed(X, Z) - generating_partial(X, Z, nterms))))
    # z-derivative route: Taylor coefficients of the closed form vs T_n(x)
    coef_dev = 0.0
    for x in np.linspace(-1.0, 1.0, 9):
        got = generating_coefficients(float(x), 20)
        want = np.array([eval_trig(n, float(x)) for n in range(21)])
        coef_dev = max(coef_dev, float(np.max(np.abs(got - want))))
    ok = dev <= tol and coef_dev <= 1e-10
    return SuiteResult("generating_function", ok, max(dev, coef_dev), max(tol, 1e-10))


def suite_orthogonality(nmax: int = 12, rule_size: int = 16) -> SuiteResult:
    rule = gauss_chebyshev(rule_size)
    dev = 0.0
    for m in range(nmax + 1):
        for n in range(nmax + 1):
            g = integrate_weighted(lambda x: eval_trig(m, x) * eval_trig(n, x), rule)
            want = 0.0 if m != n else (math.pi if m == 0 else math.pi / 2)
            dev = max(dev, abs(g - want))
    return SuiteResult("orthogonality", dev <= 1e-12, dev, 1e-12)


def suite_general_solution(seed: int = 0, samples: int = 100) -> SuiteResult:
    rng = np.random.default_rng(seed)
    dev = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, 11))
        b1, b2 = rng.uniform(-2, 2, size=2)
        x = float(rng.uniform(-0.9, 0.9))
        dev = max(dev, abs(general_solution_residual(n, float(b1), float(b2), x)))
    return SuiteResult("general_solution", dev <= 1e-9, dev, 1e-9)


def suite_parseval() -> SuiteResult:
    t3 = PolyTarget(tuple(chebyshev_T(3).coeffs))
    septic = preset("septic")
    g1 = parseval_gap(t3, cheb_coefficients(t3, 3), 64)
    g2 = parseval_gap(septic, cheb_coefficients(septic, 7), 64)
    step = preset("unit_step")
    gaps = [parseval_gap(step, cheb_coefficients(step, N), 4096) for N in (5, 10, 20, 40)]
    decreasing = all(a > b > 0 for a, b in zip(gaps, gaps[1:]))
    dev = max(g1, g2)
    return SuiteResult("parseval", dev <= 1e-10 and decreasing, dev, 1e-10)


def run_all(seed: int = 0, nmax: int = 30, table: Sequence[Poly] | None = None) -> list[SuiteResult]:
    """Run every suite; ``table`` replaces the recurrence-built T_0..T_nmax."""
    table = list(table) if table is not None else build_table(nmax)
    suites: list[Callable[[], SuiteResult]] = [
        lambda: suite_ode(table),
        lambda: suite_rodrigues(table),
        lambda: suite_recurrence(table),
        lambda: suite_parity(table),
        lambda: suite_endpoints(table),
        lambda: suite_trig(table),
        suite_generating,
        suite_orthogonality,
        lambda: suite_general_solution(seed),
        suite_parseval,
    ]
    return [s() for s in suites]


def inject_fault(table: Sequence[Poly], spec: str) -> list[Poly]:
    """Return a copy of ``table`` with one coefficient sign flipped.

    ``spec`` is ``"T<n>"`` (flip the leading coefficient) or ``"T<n>:<k>"``.
    """
    name, _, k = spec.partition(":")
    if not name.startswith("T"):
        raise ValueError(f"fault spec must look like T5 or T5:3, got {spec!r}")
    n = int(name[1:])
    out = list(table)
    coeffs = list(out[n].coeffs)
    idx = int(k) if k else len(coeffs) - 1
    coeffs[idx] = -coeffs[idx]
    out[n] = Poly(coeffs)
    return out
