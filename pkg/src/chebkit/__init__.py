"""Chebyshev polynomials with exact identity checks, plus Chebyshev-vs-Fourier
approximation experiments on [-1, 1]."""
from .approx import (
    ErrorMetrics,
    FourierSeries,
    cheb_coefficients,
    cheb_to_monomial,
    error_metrics,
    eval_cheb_series,
    eval_fourier_series,
    fourier_coefficients,
    gibbs_overshoot,
    monomial_to_cheb,
    parseval_gap,
)
from .core import (
    ChebSeries,
    DomainError,
    Parity,
    chebyshev_T,
    chebyshev_U,
    clenshaw,
    eval_trig,
    general_solution_residual,
    generating_closed,
    generating_partial,
    ode_residual,
    parity,
    rodrigues,
)
from .poly import HalfPowerTerm, Poly, poly_arith, poly_derivative
from .quadrature import QuadRule, gauss_chebyshev, gauss_legendre_composite, integrate_weighted
from .targets import PolyTarget, StepTarget, parse_target, preset, render_target

__version__ = "0.1.0"
