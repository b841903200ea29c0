"""Exact polynomial arithmetic over the rationals.

Two representations live here:

* :class:`Poly`, a dense monomial-basis polynomial with ``Fraction``
  coefficients, and
* :class:`HalfPowerTerm`, an expression ``p(x) * (1 - x**2)**(m/2)`` with odd
  ``m``.  Differentiating such a term gives another term of the same shape,
  so n-fold derivatives of ``(1 - x**2)**(n - 1/2)`` stay exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np


def _normalize(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class Poly:
    """Dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The zero polynomial has no coefficients and degree ``None``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: Poly) -> Poly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Rational)):
            return Poly(c * other for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> Poly:
        scalar = Fraction(scalar)
        return Poly(c / scalar for c in self.coeffs)

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def compose_neg(self) -> Poly:
        """Return ``p(-x)``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __call__(self, x):
        """Evaluate by Horner's rule.

        ``Fraction``/``int`` arguments give an exact result; floats and numpy
        arrays are evaluated in double precision.
        """
        if isinstance(x, (int, Rational)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc if acc.ndim else float(acc)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Rational)):
        return Poly((p,))
    raise TypeError(f"cannot treat {type(p).__name__} as Poly")


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Exact ``a <op> b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


ONE_MINUS_X2 = Poly((1, 0, -1))


@dataclass(frozen=True)
class HalfPowerTerm:
    """``p(x) * (1 - x**2)**(m/2)`` with ``m`` odd."""

    p: Poly
    m: int

    def __post_init__(self):
        if self.m % 2 == 0:
            raise ValueError(f"half-power exponent must be odd, got m={self.m}")

    def derivative(self) -> HalfPowerTerm:
        # d/dx [p (1-x^2)^(m/2)] = [p' (1-x^2) - m x p] (1-x^2)^((m-2)/2)
        q = self.p.derivative() * ONE_MINUS_X2 - Poly.x() * self.p * self.m
        return HalfPowerTerm(q, self.m - 2)

    def nth_derivative(self, n: int) -> HalfPowerTerm:
        term = self
        for _ in range(n):
            term = term.derivative()
        return term

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(np.abs(x) >= 1) and self.m < 0:
            raise ValueError("negative half-power is singular at |x| >= 1")
        if np.any(np.abs(x) > 1):
            raise ValueError("(1 - x^2)^(m/2) is not real for |x| > 1")
        val = self.p(x) * (1.0 - x * x) ** (self.m / 2)
        return val if np.ndim(val) else float(val)


def double_factorial_odd(n: int) -> int:
    """(2n-1)(2n-3)...1, equal to 1 for ``n = 0``."""
    return math.prod(range(2 * n - 1, 0, -2))


def poly_from_floats(coeffs: Sequence[float]) -> Poly:
    """Exact binary value of each float coefficient."""
    return Poly(Fraction(float(c)) for c in coeffs)
