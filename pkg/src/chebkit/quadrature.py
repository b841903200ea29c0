"""Fixed quadrature rules on [-1, 1]."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss


class QuadratureError(ValueError):
    pass


class RuleKind(enum.Enum):
    GAUSS_CHEBYSHEV = "gauss_chebyshev"
    GAUSS_LEGENDRE_COMPOSITE = "gauss_legendre_composite"


# leggauss loses accuracy beyond roughly 100 points per panel
SUPPORTED_LEGENDRE_ORDERS = range(1, 101)


@dataclass(frozen=True, eq=False)
class QuadRule:
    kind: RuleKind
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int

    def __len__(self) -> int:
        return len(self.nodes)


def gauss_chebyshev(m: int) -> QuadRule:
    """m-point rule for the weight 1/sqrt(1-x^2); all weights are pi/m.

    Nodes are computed on one half and mirrored so the rule is exactly
    symmetric in floating point.
    """
    if int(m) != m or m < 1:
        raise QuadratureError(f"rule size must be a positive integer, got {m!r}")
    m = int(m)
    k = np.arange(1, m // 2 + 1)
    upper = np.cos((2 * k - 1) * np.pi / (2 * m))  # descending, positive
    mid = np.zeros(1) if m % 2 else np.zeros(0)
    nodes = np.concatenate([-upper, mid, upper[::-1]])
    weights = np.full(m, np.pi / m)
    return QuadRule(RuleKind.GAUSS_CHEBYSHEV, nodes, weights, 2 * m - 1)


def composite_legendre(edges: Sequence[float], order: int) -> QuadRule:
    """Gauss-Legendre with ``order`` points on each panel between ``edges``."""
    if order not in SUPPORTED_LEGENDRE_ORDERS:
        raise QuadratureError(f"unsupported Gauss-Legendre order {order}")
    edges = np.asarray(edges, dtype=float)
    if edges[0] != -1.0 or edges[-1] != 1.0 or np.any(np.diff(edges) <= 0):
        raise QuadratureError("panel edges must increase from -1 to 1")
    t, w = leggauss(order)
    lo, hi = edges[:-1, None], edges[1:, None]
    half = (hi - lo) / 2
    nodes = (lo + hi) / 2 + half * t
    weights = half * w
    return QuadRule(
        RuleKind.GAUSS_LEGENDRE_COMPOSITE, nodes.ravel(), weights.ravel(), 2 * order - 1
    )


def gauss_legendre_composite(panels: int, order: int = 8) -> QuadRule:
    if int(panels) != panels or panels < 1:
        raise QuadratureError(f"panel count must be a positive integer, got {panels!r}")
    return composite_legendre(np.linspace(-1.0, 1.0, int(panels) + 1), order)


def _sample(f: Callable, nodes: np.ndarray) -> np.ndarray:
    vals = np.broadcast_to(np.asarray(f(nodes), dtype=float), nodes.shape)
    if not np.all(np.isfinite(vals)):
        raise QuadratureError("integrand is not finite at every node")
    return vals


def integrate(f: Callable, rule: QuadRule) -> float:
    """sum_k w_k f(x_k), accumulated with fsum in node order."""
    return math.fsum(rule.weights * _sample(f, rule.nodes))


def integrate_weighted(f: Callable, rule: QuadRule) -> float:
    """Approximate the integral of f(x)/sqrt(1-x^2) over [-1, 1]."""
    if rule.kind is not RuleKind.GAUSS_CHEBYSHEV:
        raise QuadratureError("weighted integrals need a Gauss-Chebyshev rule")
    return integrate(f, rule)

