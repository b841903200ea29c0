"""Target functions on [-1, 1] and their string form.

Grammar::

    poly:c0,c1,...,cd      monomial coefficients, ascending; ints, decimals or p/q
    step:x0/low/high       low left of x0, high right of x0, midpoint at x0;
                           a rational inside a step is written (p/q)
    preset:septic          x^7 - 14x^5 + 49x^3 - 36x
    preset:unit_step       step:0/-1/1
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .poly import Poly


class TargetParseError(ValueError):
    pass


@dataclass(frozen=True)
class PolyTarget:
    coeffs: tuple[Fraction, ...]
    preset: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("polynomial target needs at least one coefficient")

    @property
    def poly(self) -> Poly:
        return Poly(self.coeffs)

    @property
    def degree(self) -> int:
        d = self.poly.degree
        return 0 if d is None else d

    def __call__(self, x):
        return self.poly(np.asarray(x, dtype=float))


@dataclass(frozen=True)
class StepTarget:
    x0: Fraction
    low: Fraction
    high: Fraction
    preset: str | None = None

    def __post_init__(self):
        for name in ("x0", "low", "high"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not -1 < self.x0 < 1:
            raise ValueError("step location must lie strictly inside (-1, 1)")

    @property
    def midpoint(self) -> float:
        return float((self.low + self.high) / 2)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        x0 = float(self.x0)
        val = np.where(x < x0, float(self.low), float(self.high))
        val = np.where(x == x0, self.midpoint, val)
        return val if val.ndim else float(val)


TargetFn = Union[PolyTarget, StepTarget]

SEPTIC = (0, -36, 0, 49, 0, -14, 0, 1)

PRESETS = {
    "septic": lambda: PolyTarget(SEPTIC, preset="septic"),
    "unit_step": lambda: StepTarget(0, -1, 1, preset="unit_step"),
}


def preset(name: str) -> TargetFn:
    try:
        return PRESETS[name]()
    except KeyError:
        raise TargetParseError(f"unknown preset {name!r}; known: {sorted(PRESETS)}") from None


_STEP_SPLIT = re.compile(r"/(?![^()]*\))")


def _number(tok: str) -> Fraction:
    tok = tok.strip()
    if tok.startswith("(") and tok.endswith(")"):
        tok = tok[1:-1]
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise TargetParseError(f"not a number: {tok!r}") from None


def parse_target(text: str) -> TargetFn:
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise TargetParseError(f"target must look like kind:args, got {text!r}")
    if kind == "preset":
        return preset(body.strip())
    if kind == "poly":
        toks = body.split(",")
        if not body.strip():
            raise TargetParseError("poly: needs at least one coefficient")
        return PolyTarget(tuple(_number(t) for t in toks))
    if kind == "step":
        toks = _STEP_SPLIT.split(body)
        if len(toks) != 3:
            raise TargetParseError(f"step: expects x0/low/high, got {body!r}")
        x0, low, high = (_number(t) for t in toks)
        try:
            return StepTarget(x0, low, high)
        except ValueError as exc:
            raise TargetParseError(str(exc)) from None
    raise TargetParseError(f"unknown target kind {kind!r}")


def render_target(target: TargetFn) -> str:
    if target.preset is not None:
        return f"preset:{target.preset}"
    if isinstance(target, PolyTarget):
        return "poly:" + ",".join(str(c) for c in target.coeffs)
    return "step:" + "/".join(_step_number(v) for v in (target.x0, target.low, target.high))


def _step_number(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d == 1:
        # terminating decimal; Fraction parses it back exactly
        digits = 0
        while (q * 10**digits).denominator != 1:
            digits += 1
        return _decimal(q, digits)
    return f"({q})"


def _decimal(q: Fraction, digits: int) -> str:
    scaled = q * 10**digits
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"
