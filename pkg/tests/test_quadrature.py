import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lerchphi import quadrature as Q
from lerchphi.errors import BudgetExhausted, NonFinite, PoleHit


def test_zero_integrand():
    r = Q.integrate(Q.Integrand(lambda u: np.zeros_like(u)))
    assert r.value == 0 and r.abs_error_estimate == 0 and r.evaluations > 0


def test_sin_cot_is_one():
    r = Q.integrate(Q.Integrand(lambda u: np.sin(2 * np.pi * u) * Q.cot_pi(u)))
    assert r.value == pytest.approx(1.0, abs=1e-12)


def test_cosine_footnote_integral():
    f = Q.Integrand(lambda u: (1 - np.cos(6 * np.pi * u)) * Q.cot_pi(u))
    assert abs(Q.integrate(f).value) < 1e-11


def test_polynomial_exact():
    r = Q.integrate(lambda u: u**5 - 3 * u**2)
    assert r.value == pytest.approx(1 / 6 - 1, abs=1e-14)


def test_budget_exhausted_keeps_partial():
    with pytest.raises(BudgetExhausted) as info:
        Q.integrate(lambda u: np.sin(400 * np.pi * u) * np.exp(u), rel_tol=1e-14, abs_tol=1e-16, max_evals=60, min_panels=1)
    assert info.value.partial is not None and info.value.partial.evaluations <= 60


def test_nonfinite():
    with pytest.raises(NonFinite):
        Q.integrate(lambda u: np.where(u > 0.3, np.nan, 1.0))


def test_bad_options():
    with pytest.raises(ValueError):
        Q.integrate(lambda u: u, rel_tol=0)
    with pytest.raises(ValueError):
        Q.QuadOptions(max_evals=10)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("LERCH_KERNEL_MAX_EVALS", "1234")
    assert Q.QuadOptions().max_evals == 1234


def test_endpoint_limits_avoid_raw_evaluation():
    seen = []

    def f(u):
        seen.append(np.asarray(u).copy())
        return np.sin(np.pi * u) / u

    r = Q.integrate(Q.Integrand(f, (math.pi, 0.0)))
    allu = np.concatenate(seen)
    assert allu.min() >= Q.ENDPOINT_EPS and allu.max() <= 1 - Q.ENDPOINT_EPS
    assert r.value == pytest.approx(1.8519370519824662, abs=1e-12)  # Si(pi)


def test_kernels_exact_angles():
    assert Q.cot_kernel(0.5, 2) == pytest.approx(1.0, abs=1e-15)
    assert Q.cot_kernel(0.25, 1) == pytest.approx(1.0, abs=1e-15)
    for u in (1e-9, 1e-6, 1e-3):
        assert Q.coth_kernel(u, 2 + 1j) * ((2 + 1j) * u / 2) == pytest.approx(1.0, abs=1e-6)


def test_kernel_poles():
    with pytest.raises(PoleHit):
        Q.cot_pi(np.array([0.2, 3.0]))
    with pytest.raises(PoleHit):
        Q.coth(1j * np.pi)
    with pytest.raises(PoleHit):
        Q.coth(0.0)


@given(st.floats(1e-10, 9e-5), st.floats(-1, 1))
def test_laurent_matches_direct(r, phase):
    z = r * complex(math.cos(phase), math.sin(phase))
    # within the Laurent radius the series agrees with the exact cot to relative 1e-14
    exact = complex(np.cos(z) / np.sin(z))
    assert abs(complex(Q.cot_pi(z / math.pi)) - exact) <= 1e-14 * abs(exact)
    exact_h = complex(np.cosh(z) / np.sinh(z))
    assert abs(complex(Q.coth(z)) - exact_h) <= 1e-14 * abs(exact_h)


@given(st.floats(0.01, 0.99), st.integers(-5, 5))
def test_cot_periodic(x, j):
    assert Q.cot_pi(x + j) == pytest.approx(Q.cot_pi(x), rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("k", [0, 1, 2])
@pytest.mark.parametrize("m", [1.5, 2.0, 4.0, -2.0])
def test_oscillatory_limits(k, m):
    n = 1000
    assert abs(Q.sine_limit_integral(k, m, n) - abs(m / 2)) < 1e-2 * abs(m)
    assert abs(Q.cosine_limit_integral(k, m, n) - m * math.log(abs(m)) / math.pi) < 1e-2 * abs(m)
    assert abs(Q.half_cosine_limit_integral(k, m, n) - m / math.pi * math.log(abs(m) / 2)) < 1e-2 * abs(m)


def test_oscillation_panels():
    assert Q.oscillation_panels(0, 3) == 8
    assert Q.oscillation_panels(100, 2) == 200


@given(st.floats(-3, 3), st.floats(-3, 3))
def test_linearity(c1, c2):
    f = lambda u: np.exp(u)
    g = lambda u: np.cos(3 * u)
    lhs = Q.integrate(lambda u: c1 * f(u) + c2 * g(u)).value
    rhs = c1 * Q.integrate(f).value + c2 * Q.integrate(g).value
    assert abs(lhs - rhs) < 1e-12 * (1 + abs(c1) + abs(c2))
