"""Chebyshev and Fourier approximation of target functions, and the metrics
used to compare them (sup/weighted-L2 error, Parseval gap, Gibbs overshoot)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .core import ChebSeries, DomainError, chebyshev_T, clenshaw, eval_trig
from .poly import Poly
from .quadrature import (
    QuadRule,
    QuadratureError,
    RuleKind,
    composite_legendre,
    gauss_chebyshev,
    integrate,
    integrate_weighted,
)
from .targets import StepTarget, TargetFn

STEP_RULE_SIZE = 4096
DEFAULT_GRID = 2001
GIBBS_POINTS = 10_001


@dataclass(frozen=True)
class FourierSeries:
    """a0/2 + sum_n a_n cos(n pi x) + b_n sin(n pi x) on [-1, 1]."""

    a0: float
    a: tuple[float, ...]
    b: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("cosine and sine coefficient lists differ in length")
        if not all(math.isfinite(v) for v in (self.a0, *self.a, *self.b)):
            raise ValueError("Fourier coefficients must be finite")

    @property
    def order(self) -> int:
        return len(self.a)

    def __call__(self, x):
        return eval_fourier_series(self, x)


def default_rule_size(target: Callable, N: int) -> int:
    if isinstance(target, StepTarget):
        return STEP_RULE_SIZE
    return max(64, 2 * N + 2)


def cheb_coefficients(f: Callable, N: int, rule_size: int | None = None) -> ChebSeries:
    """Project f onto T_0..T_N with Gauss-Chebyshev quadrature."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if rule_size is None:
        rule_size = default_rule_size(f, N)
    if rule_size < N + 1:
        raise QuadratureError(f"rule_size {rule_size} is too small for N = {N}")
    rule = gauss_chebyshev(rule_size)
    fx = np.broadcast_to(np.asarray(f(rule.nodes), dtype=float), rule.nodes.shape)
    coeffs = []
    for n in range(N + 1):
        tn = eval_trig(n, rule.nodes)
        scale = 1 / math.pi if n == 0 else 2 / math.pi
        coeffs.append(scale * integrate_weighted(lambda _x: fx * tn, rule))
    return ChebSeries(coeffs)


def monomial_to_cheb(p: Poly) -> list[Fraction]:
    """Exact Chebyshev coefficients of a monomial-basis polynomial.

    The leading term c x^k is removed with (c / 2^(k-1)) T_k, repeatedly.
    Returned as Fractions; ``ChebSeries(monomial_to_cheb(p))`` gives the float
    series.
    """
    if p.is_zero():
        return [Fraction(0)]
    out = [Fraction(0)] * (p.degree + 1)
    rest = p
    while not rest.is_zero():
        k = rest.degree
        lead = rest.coeffs[-1]
        c = lead if k == 0 else lead / 2 ** (k - 1)
        out[k] = c
        rest = rest - chebyshev_T(k) * c
    return out


def cheb_to_monomial(coeffs: Sequence) -> Poly:
    total = Poly.zero()
    for n, c in enumerate(coeffs):
        total = total + chebyshev_T(n) * Fraction(c)
    return total


def default_fourier_rule(target: Callable, panels: int = 128, order: int = 10) -> QuadRule:
    """Composite Gauss-Legendre rule with a panel edge on any jump."""
    if isinstance(target, StepTarget):
        x0 = float(target.x0)
        left = max(1, round(panels * (x0 + 1) / 2))
        right = max(1, panels - left)
        edges = np.concatenate(
            [np.linspace(-1.0, x0, left + 1), np.linspace(x0, 1.0, right + 1)[1:]]
        )
        return composite_legendre(edges, order)
    return composite_legendre(np.linspace(-1.0, 1.0, panels + 1), order)


def fourier_coefficients(f: Callable, N: int, rule: QuadRule | None = None) -> FourierSeries:
    """Period-2 Fourier coefficients: a_n, b_n = int f cos/sin(n pi x) dx."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if rule is None:
        rule = default_fourier_rule(f)
    if rule.kind is not RuleKind.GAUSS_LEGENDRE_COMPOSITE:
        raise QuadratureError("Fourier coefficients need a composite Gauss-Legendre rule")
    fx = np.broadcast_to(np.asarray(f(rule.nodes), dtype=float), rule.nodes.shape)
    a0 = integrate(lambda _x: fx, rule)
    a, b = [], []
    for n in range(1, N + 1):
        arg = n * np.pi * rule.nodes
        a.append(integrate(lambda _x: fx * np.cos(arg), rule))
        b.append(integrate(lambda _x: fx * np.sin(arg), rule))
    return FourierSeries(a0, tuple(a), tuple(b))


def eval_cheb_series(s: ChebSeries, x):
    return clenshaw(s, x)


def eval_fourier_series(s: FourierSeries, x):
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(np.abs(arr) > 1):
        raise DomainError("x must lie in [-1, 1]")
    total = np.full(arr.shape, s.a0 / 2)
    for n, (an, bn) in enumerate(zip(s.a, s.b), start=1):
        arg = n * np.pi * arr
        total = total + an * np.cos(arg) + bn * np.sin(arg)
    return total if total.ndim else float(total)


@dataclass(frozen=True)
class ErrorMetrics:
    sup_error: float
    l2w_error: float


def error_metrics(f: Callable, approx: Callable, grid_size: int = DEFAULT_GRID) -> ErrorMetrics:
    """Sup error on a uniform closed grid and weighted L2 error.

    The weighted error uses a Gauss-Chebyshev rule with ``grid_size`` nodes.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    x = np.linspace(-1.0, 1.0, grid_size)
    sup = float(np.max(np.abs(np.asarray(f(x)) - np.asarray(approx(x)))))
    rule = gauss_chebyshev(grid_size)
    sq = integrate_weighted(lambda t: (np.asarray(f(t)) - np.asarray(approx(t))) ** 2, rule)
    return ErrorMetrics(sup, math.sqrt(max(sq, 0.0)))


def weighted_energy(f: Callable, rule_size: int) -> float:
    """int f^2 / sqrt(1-x^2) dx over [-1, 1]."""
    return integrate_weighted(lambda t: np.asarray(f(t), dtype=float) ** 2, gauss_chebyshev(rule_size))


def coefficient_energy(s: ChebSeries) -> float:
    c = s.coeffs
    return math.fsum([math.pi * c[0] ** 2] + [math.pi / 2 * v * v for v in c[1:]])


def parseval_gap(f: Callable, s: ChebSeries, rule_size: int) -> float:
    """|weighted energy of f - (C_0^2 pi + pi/2 sum C_n^2)|."""
    return abs(weighted_energy(f, rule_size) - coefficient_energy(s))


def gibbs_overshoot(
    f: TargetFn, approx: Callable, window: float = 0.2, points: int = GIBBS_POINTS
) -> float:
    """Relative overshoot of ``approx`` above the upper plateau right of the jump.

    The maximum is taken on ``points`` uniformly spaced points in
    (x0, x0 + window]; the result is normalised by high - low.
    """
    if not isinstance(f, StepTarget):
        raise TypeError("Gibbs overshoot is defined for step targets only")
    x0 = float(f.x0)
    if window <= 0 or x0 + window > 1:
        raise ValueError("window must be positive and stay inside [-1, 1]")
    x = np.linspace(x0, x0 + window, points + 1)[1:]
    peak = float(np.max(approx(x)))
    high, low = float(f.high), float(f.low)
    return (peak - high) / (high - low)
