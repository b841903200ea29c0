"""Chebyshev polynomials: construction, evaluation and per-polynomial identities."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .poly import ONE_MINUS_X2, HalfPowerTerm, Poly, double_factorial_odd


class DomainError(ValueError):
    """Argument outside the interval where the operation is defined."""


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


def _check_closed(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(np.abs(arr) > 1):
        raise DomainError("x must lie in [-1, 1]")
    return arr


def _check_n(n: int) -> int:
    if int(n) != n or n < 0:
        raise ValueError(f"degree must be a non-negative integer, got {n!r}")
    return int(n)


@lru_cache(maxsize=None)
def _t_table(n: int) -> tuple[Poly, ...]:
    if n == 0:
        return (Poly.one(),)
    if n == 1:
        return (Poly.one(), Poly.x())
    prev = _t_table(n - 1)
    return prev + (2 * Poly.x() * prev[-1] - prev[-2],)


@lru_cache(maxsize=None)
def _u_table(n: int) -> tuple[Poly, ...]:
    if n == 0:
        return (Poly.one(),)
    if n == 1:
        return (Poly.one(), Poly((0, 2)))
    prev = _u_table(n - 1)
    return prev + (2 * Poly.x() * prev[-1] - prev[-2],)


def chebyshev_T(n: int) -> Poly:
    """First-kind polynomial from the three-term recurrence."""
    return _t_table(_check_n(n))[-1]


def chebyshev_U(n: int) -> Poly:
    """Second-kind polynomial: U_0 = 1, U_1 = 2x, same recurrence as T."""
    return _u_table(_check_n(n))[-1]


def eval_trig(n: int, x):
    """cos(n arccos x) on the closed interval [-1, 1]."""
    n = _check_n(n)
    arr = _check_closed(x)
    val = np.cos(n * np.arccos(arr))
    return val if val.ndim else float(val)


def eval_trig_U(n: int, x):
    """sin((n+1) arccos x) / sin(arccos x); interior points only."""
    n = _check_n(n)
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) >= 1):
        raise DomainError("the quotient form of U_n needs |x| < 1")
    th = np.arccos(arr)
    val = np.sin((n + 1) * th) / np.sin(th)
    return val if val.ndim else float(val)


@dataclass(frozen=True)
class ChebSeries:
    """Coefficients C_0..C_N of a Chebyshev expansion on [-1, 1]."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Sequence[float]):
        c = tuple(float(v) for v in coeffs)
        if not c:
            raise ValueError("a Chebyshev series needs at least C_0")
        if not all(math.isfinite(v) for v in c):
            raise ValueError("Chebyshev coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return clenshaw(self, x)


def clenshaw(series: ChebSeries | Sequence[float], x):
    """Evaluate sum C_n T_n(x) with the backward recurrence."""
    coeffs = series.coeffs if isinstance(series, ChebSeries) else tuple(series)
    arr = _check_closed(x)
    b1 = np.zeros_like(arr)
    b2 = np.zeros_like(arr)
    for c in reversed(coeffs[1:]):
        b1, b2 = c + 2.0 * arr * b1 - b2, b1
    val = coeffs[0] + arr * b1 - b2
    return val if val.ndim else float(val)


def ode_residual(n: int, t: Poly | None = None) -> Poly:
    """(1 - x^2) y'' - x y' + n^2 y for y = T_n, in exact arithmetic.

    ``t`` overrides the polynomial under test (used to check that faults are
    detected).
    """
    n = _check_n(n)
    y = chebyshev_T(n) if t is None else t
    d1 = y.derivative()
    d2 = d1.derivative()
    return ONE_MINUS_X2 * d2 - Poly.x() * d1 + y * (n * n)


def second_kind_residual(n: int) -> Poly:
    """Exact residual of sqrt(1-x^2) U_{n-1} in the Chebyshev ODE.

    With h = sqrt(1-x^2) U_{n-1}, h' = q1 (1-x^2)^(-1/2) and
    h'' = q2 (1-x^2)^(-3/2), the residual equals
    (1-x^2)^(-1/2) [q2 - x q1 + n^2 (1-x^2) U_{n-1}].  The bracket is returned.
    """
    n = _check_n(n)
    if n < 1:
        raise ValueError("second solution needs n >= 1")
    h = HalfPowerTerm(chebyshev_U(n - 1), 1)
    h1 = h.derivative()
    h2 = h1.derivative()
    return h2.p - Poly.x() * h1.p + ONE_MINUS_X2 * h.p * (n * n)


def general_solution_residual(n: int, b1: float, b2: float, x: float) -> float:
    """ODE residual at x of y = b1 T_n + b2 sqrt(1-x^2) U_{n-1}."""
    n = _check_n(n)
    if n < 1:
        raise ValueError("general solution needs n >= 1")
    if not abs(x) < 1:
        raise DomainError("general_solution_residual needs |x| < 1")
    t0 = chebyshev_T(n)
    t1 = t0.derivative()
    t2 = t1.derivative()
    h0 = HalfPowerTerm(chebyshev_U(n - 1), 1)
    h1 = h0.derivative()
    h2 = h1.derivative()
    y = b1 * t0(x) + b2 * h0(x)
    dy = b1 * t1(x) + b2 * h1(x)
    d2y = b1 * t2(x) + b2 * h2(x)
    return (1 - x * x) * d2y - x * dy + n * n * y


def rodrigues(n: int) -> Poly:
    """T_n through its derivative representation, exactly.

    Differentiating (1-x^2)^(n-1/2) n times leaves q(x) (1-x^2)^(-1/2); the
    sqrt(1-x^2) prefactor cancels the half power, leaving
    q / ((-1)^n (2n-1)!!).
    """
    n = _check_n(n)
    term = HalfPowerTerm(Poly.one(), 2 * n - 1).nth_derivative(n)
    assert term.m == -1
    return term.p / ((-1) ** n * double_factorial_odd(n))


def generating_closed(x, z):
    """(1 - z x) / (1 - 2 z x + z^2) for |x| <= 1, |z| < 1."""
    arr = _check_closed(x)
    z = np.asarray(z, dtype=float)
    if np.any(np.abs(z) >= 1):
        raise DomainError("generating function needs |z| < 1")
    val = (1 - z * arr) / (1 - 2 * z * arr + z * z)
    return val if np.ndim(val) else float(val)


def generating_partial(x, z, N: int):
    """sum_{n=0}^{N} T_n(x) z^n, with T_n(x) from the value recurrence."""
    N = _check_n(N)
    arr = _check_closed(x)
    z = np.asarray(z, dtype=float)
    t_prev, t_cur = np.ones_like(arr), arr
    total = np.ones(np.broadcast(arr, z).shape)
    zn = np.ones_like(z)
    for n in range(1, N + 1):
        zn = zn * z
        total = total + t_cur * zn
        t_prev, t_cur = t_cur, 2 * arr * t_cur - t_prev
    return total if total.ndim else float(total)


def generating_coefficients(x: float, N: int, radius: float = 0.8, points: int = 512) -> np.ndarray:
    """Taylor coefficients in z of the closed generating form at fixed x.

    Coefficients are extracted numerically from the closed form alone: the
    n-th z-derivative at z = 0 divided by n! is a Cauchy contour integral,
    evaluated by the trapezoidal rule on |z| = radius.  The result should
    reproduce T_0(x)..T_N(x) as given by the recurrence.
    """
    if not abs(x) <= 1:
        raise DomainError("x must lie in [-1, 1]")
    if points <= N:
        raise ValueError("need more contour points than coefficients")
    z = radius * np.exp(2j * np.pi * np.arange(points) / points)
    g = (1 - z * x) / (1 - 2 * z * x + z * z)
    c = np.fft.fft(g) / points
    return (c[: N + 1] / radius ** np.arange(N + 1)).real


def poly_parity(p: Poly) -> Parity | None:
    """Parity from the coefficient pattern; None for mixed or zero."""
    if p.is_zero():
        return None
    odd = any(c != 0 for c in p.coeffs[1::2])
    even = any(c != 0 for c in p.coeffs[0::2])
    if even and not odd:
        return Parity.EVEN
    if odd and not even:
        return Parity.ODD
    return None


def parity(n: int) -> Parity:
    n = _check_n(n)
    expected = Parity.EVEN if n % 2 == 0 else Parity.ODD
    found = poly_parity(chebyshev_T(n))
    if found is not expected:
        raise AssertionError(f"T_{n} has coefficient parity {found}, expected {expected}")
    return expected
