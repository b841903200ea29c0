import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chebkit.core import (
    ChebSeries,
    DomainError,
    Parity,
    chebyshev_T,
    chebyshev_U,
    clenshaw,
    eval_trig,
    eval_trig_U,
    general_solution_residual,
    generating_closed,
    generating_coefficients,
    generating_partial,
    ode_residual,
    parity,
    rodrigues,
    second_kind_residual,
)
from chebkit.poly import Poly

FIG1 = {
    0: (1,),
    1: (0, 1),
    2: (-1, 0, 2),
    3: (0, -3, 0, 4),
    4: (1, 0, -8, 0, 8),
    5: (0, 5, 0, -20, 0, 16),
}


@pytest.mark.parametrize("n,coeffs", FIG1.items())
def test_T_low_orders(n, coeffs):
    assert chebyshev_T(n) == Poly(coeffs)


@pytest.mark.parametrize("n", range(0, 31))
def test_T_degree_and_leading(n):
    t = chebyshev_T(n)
    assert t.degree == n
    assert t.coeffs[-1] == (1 if n == 0 else 2 ** (n - 1))


def test_T_rejects_negative():
    with pytest.raises(ValueError):
        chebyshev_T(-1)


def _u_by_angle_addition(n):
    # sin((n+1)t)/sin t = sum_k C(n+1, 2k+1) (-1)^k cos^(n-2k) t sin^(2k) t / ... expanded
    # with sin^2 = 1 - cos^2; independent of the recurrence
    total = Poly.zero()
    one_minus = Poly((1, 0, -1))
    for k in range((n + 2) // 2):
        if 2 * k + 1 > n + 1:
            break
        term = Poly.monomial(n - 2 * k, math.comb(n + 1, 2 * k + 1) * (-1) ** k)
        for _ in range(k):
            term = term * one_minus
        total = total + term
    return total


@pytest.mark.parametrize("n", range(0, 12))
def test_U_matches_angle_addition(n):
    assert chebyshev_U(n) == _u_by_angle_addition(n)


def test_U_examples():
    assert chebyshev_U(0) == Poly.one()
    assert chebyshev_U(1) == Poly((0, 2))
    assert chebyshev_U(2) == Poly((-1, 0, 4))


@pytest.mark.parametrize("n", range(0, 15))
def test_U_quotient_and_endpoint(n):
    u = chebyshev_U(n)
    assert u.coeffs[-1] == 2**n
    x = np.linspace(-0.99, 0.99, 37)
    np.testing.assert_allclose(u(x), eval_trig_U(n, x), atol=1e-10 * (n + 1) ** 2)
    assert u(1) == n + 1


def test_eval_trig_examples():
    for n in range(10):
        assert eval_trig(n, 1.0) == 1.0
    assert eval_trig(2, 0.0) == -1.0
    assert eval_trig(7, 0.3) == pytest.approx(float(chebyshev_T(7)(Fraction(0.3))), abs=1e-12)


@pytest.mark.parametrize("x", [1.0000001, -2.0, float("nan")])
def test_eval_trig_domain(x):
    with pytest.raises(DomainError):
        eval_trig(3, x)


def test_clenshaw_examples():
    assert clenshaw(ChebSeries([1.0]), -0.2) == 1.0
    assert clenshaw(ChebSeries([0.0, 1.0]), 0.5) == 0.5
    x7 = ChebSeries([0, 35 / 64, 0, 21 / 64, 0, 7 / 64, 0, 1 / 64])
    assert clenshaw(x7, 0.9) == pytest.approx(0.9**7, abs=1e-12)
    with pytest.raises(DomainError):
        clenshaw(x7, 1.5)


@given(st.lists(st.floats(-1, 1), min_size=1, max_size=30), st.floats(-1, 1))
def test_clenshaw_matches_naive_sum(coeffs, x):
    naive = math.fsum(c * math.cos(n * math.acos(x)) for n, c in enumerate(coeffs))
    scale = sum(abs(c) for c in coeffs)
    assert clenshaw(ChebSeries(coeffs), x) == pytest.approx(naive, abs=1e-10 * (1 + scale))


@pytest.mark.parametrize("n", range(0, 31))
def test_ode_residual_is_zero(n):
    assert ode_residual(n).is_zero()


def test_ode_residual_catches_wrong_polynomial():
    assert not ode_residual(3, Poly((0, -3, 0, 5))).is_zero()


@pytest.mark.parametrize("n", range(1, 16))
def test_second_kind_residual_exact(n):
    assert second_kind_residual(n).is_zero()


def test_general_solution_examples():
    assert abs(general_solution_residual(2, 1, 0, 0.4)) <= 1e-12
    assert abs(general_solution_residual(1, 0, 1, 0.5)) <= 1e-9
    assert abs(general_solution_residual(4, 0.3, -1.7, -0.85)) <= 1e-9
    with pytest.raises(DomainError):
        general_solution_residual(2, 1, 1, 1.0)


@settings(max_examples=200)
@given(st.integers(1, 10), st.floats(-2, 2), st.floats(-2, 2), st.floats(-0.9, 0.9))
def test_general_solution_vanishes(n, b1, b2, x):
    assert abs(general_solution_residual(n, b1, b2, x)) <= 1e-9


def test_general_solution_sqrt_by_hand():
    # y = sqrt(1-x^2): y' = -x/s, y'' = -1/s^3
    x = 0.5
    s = math.sqrt(1 - x * x)
    y, dy, d2y = s, -x / s, -1 / s**3
    assert (1 - x * x) * d2y - x * dy + y == pytest.approx(0, abs=1e-14)


def test_rodrigues_examples():
    assert rodrigues(0) == Poly.one()
    assert rodrigues(1) == Poly.x()
    assert rodrigues(6) == Poly((-1, 0, 18, 0, -48, 0, 32))


@pytest.mark.parametrize("n", range(0, 13))
def test_rodrigues_equals_recurrence(n):
    assert rodrigues(n) == chebyshev_T(n)


def test_recurrence_identity():
    x = Poly.x()
    for n in range(1, 30):
        assert chebyshev_T(n + 1) == 2 * x * chebyshev_T(n) - chebyshev_T(n - 1)


@pytest.mark.parametrize("n", range(0, 31))
def test_endpoint_values(n):
    t = chebyshev_T(n)
    assert t(1) == 1
    assert t(-1) == (-1) ** n


def test_trig_agrees_with_exact_polynomial():
    xs = np.linspace(-1, 1, 200)
    for n in range(21):
        exact = np.array([float(chebyshev_T(n)(Fraction(float(v)))) for v in xs])
        assert np.max(np.abs(eval_trig(n, xs) - exact)) <= 1e-11


def test_bounded_on_interval():
    x = np.linspace(-1, 1, 5001)
    for n in range(25):
        vals = eval_trig(n, x)
        assert np.all(np.abs(vals) <= 1 + 1e-15)
        if n > 0:
            extrema = np.cos(np.arange(n + 1) * np.pi / n)
            np.testing.assert_allclose(np.abs(eval_trig(n, np.clip(extrema, -1, 1))), 1, atol=1e-12)


def test_generating_examples():
    for z in (-0.7, 0.0, 0.3, 0.9):
        assert generating_closed(1.0, z) == pytest.approx(1 / (1 - z))
    assert generating_closed(0.0, 0.5) == pytest.approx(0.8)
    assert generating_closed(0.7, 0.3) == pytest.approx(generating_partial(0.7, 0.3, 60), abs=1e-12)
    assert generating_partial(0.4, -0.2, 0) == 1.0
    assert generating_partial(0.5, 0.4, 1) == pytest.approx(1.2)
    bound = 0.45**41 / (1 - 0.45)
    assert abs(generating_partial(-0.9, 0.45, 40) - generating_closed(-0.9, 0.45)) <= bound
    with pytest.raises(DomainError):
        generating_closed(0.2, 1.0)


@given(st.floats(-1, 1), st.floats(-0.5, 0.5), st.integers(0, 40))
def test_generating_tail_bound(x, z, N):
    bound = abs(z) ** (N + 1) / (1 - abs(z))
    diff = abs(generating_closed(x, z) - generating_partial(x, z, N))
    assert diff <= bound + 4e-15


@pytest.mark.parametrize("x", [-1.0, -0.6, 0.0, 0.25, 1.0])
def test_generating_z_derivatives_reproduce_recurrence(x):
    got = generating_coefficients(x, 20)
    want = [float(chebyshev_T(n)(Fraction(x))) for n in range(21)]
    np.testing.assert_allclose(got, want, atol=1e-10)


def test_parity_examples():
    assert parity(0) is Parity.EVEN
    assert parity(4) is Parity.EVEN
    assert parity(5) is Parity.ODD


@given(st.integers(0, 25), st.fractions(min_value=-1, max_value=1, max_denominator=1000))
def test_parity_reflection_exact(n, q):
    t = chebyshev_T(n)
    assert t(-q) == (-1) ** n * t(q)
