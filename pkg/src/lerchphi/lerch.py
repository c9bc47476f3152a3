"""Lerch's Phi(e^m, k, b) and Li_k(e^m) at positive integer order k.

The workhorse is

    E^m_k(b) = sum_{j>=1} e^{m (j + b)} / (j + b)^k,

written in closed form as Taylor-bracket, Hurwitz zeta, logarithm and
integral terms.  The closed form converges for Re(m) < 0, where it equals the
series, and stays finite for Re(m) >= 0 (outside |Im m| >= 2 pi), where it
is the analytic continuation.  Phi(e^m, k, b) = b^-k + e^{-m b} E^m_k(b).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import oracle
from ._taylor import bracket
from .errors import DomainError, ExcludedRegion, ImproperAtZero, NearSingularRegime, PoleInRange, ZeroB
from .harmonic import NEAR_SINGULAR, harmonic_number
from .quadrature import Integrand, QuadOptions, coth, cot_pi, integrate_scaled, oscillation_panels
from .regime import BClass, Regime, classify_b

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class LerchParams:
    m: complex
    k: int
    b: complex = 0j
    regime: BClass = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", complex(self.m))
        object.__setattr__(self, "b", complex(self.b))
        if int(self.k) != self.k or self.k < 1:
            raise DomainError("k must be a positive integer")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "regime", classify_b(self.b))


@dataclass(frozen=True)
class ContinuationValue:
    value: complex
    is_continuation: bool

    def __complex__(self):
        return complex(self.value)


def check_m(m) -> None:
    """Reject m = 0 and the excluded region Re(m) >= 0, |Im(m)| >= 2 pi."""
    m = complex(m)
    if m == 0:
        raise ImproperAtZero("m = 0: the closed form is an improper limit there")
    if m.real >= 0 and abs(m.imag) >= TWO_PI:
        raise ExcludedRegion(f"m = {m} lies in Re(m) >= 0, |Im(m)| >= 2 pi")


def _fsum_c(parts) -> complex:
    parts = [complex(p) for p in parts]
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def _panels(m: complex, b: complex) -> int:
    return oscillation_panels(abs(m) * (abs(b) + 1) / TWO_PI, 1.0)


def lerch_e_sum(p: LerchParams, opts: Optional[QuadOptions] = None) -> ContinuationValue:
    """E^m_k(b) = sum_{j>=1} e^{m(j+b)}/(j+b)^k, or its continuation for Re(m) > 0."""
    m, k = p.m, p.k
    check_m(m)
    cls = p.regime
    F = math.factorial(k - 1)
    if cls.regime is Regime.INTEGER:
        nb = cls.nearest_integer
        if nb < 0:
            raise PoleInRange(f"j + b vanishes at j = {-nb}")
        b = complex(nb)
    elif cls.regime is Regime.HALF_INTEGER:
        b = complex(round(2 * cls.b.real) / 2)
    else:
        b = cls.b
        if abs(cmath.sin(2 * math.pi * b)) < NEAR_SINGULAR:
            raise NearSingularRegime(f"b = {b} is too close to a half-integer or integer")

    zeta_part = [m ** (k - j) / math.factorial(k - j) * oracle.hurwitz_zeta_int(j, b + 1) for j in range(2, k + 1)]
    mk1 = m ** (k - 1) / F

    if cls.regime is Regime.GENERIC:
        s = cmath.sin(2 * math.pi * b)
        head = [-0.5 * bracket("exp", m, b, k - 2, k),
                math.pi * mk1 / 2 * complex(cot_pi(b)),
                -mk1 * cmath.log(-m / TWO_PI)]

        def f(u):
            return ((1 - u) ** (k - 1) * np.exp(m * b * u) * coth(m * u / 2)
                    + TWO_PI / m * (-1 + np.sin(2 * np.pi * b * u) / s) * cot_pi(u))
    elif cls.regime is Regime.HALF_INTEGER:
        head = [-0.5 * bracket("exp", m, b, k - 2, k), -mk1 * cmath.log(-m / math.pi)]

        def f(u):
            return (1 - u) ** (k - 1) * np.exp(m * b * u) * coth(m * u / 2) - math.pi / m * np.cos(np.pi * b * u) * cot_pi(u / 2)
    else:
        # the -1/(2b) companion of H(b) is folded into the bracket, which then
        # runs to j = k - 1 and has a finite limit at b = 0
        head = [-0.5 * bracket("exp", m, b, k - 1, k),
                -mk1 * cmath.log(-m / TWO_PI),
                -mk1 * harmonic_number(1, round(b.real))]

        def f(u):
            return (1 - u) ** (k - 1) * np.exp(m * b * u) * coth(m * u / 2) - TWO_PI / m * (1 - u) * cot_pi(u)

    rest = _fsum_c(head + zeta_part)
    weight = -(m**k) / (2 * F)
    res = integrate_scaled(Integrand(f), weight, rest, opts, min_panels=_panels(m, b))
    value = _refine(rest + weight * res.value, head + zeta_part + [weight * res.value],
                    lambda dps: _e_sum_mp(m, k, b, cls.regime, dps), opts, _first_term(m, k, b))
    return ContinuationValue(value, m.real > 0)


def lerch_phi(p: LerchParams, opts: Optional[QuadOptions] = None) -> ContinuationValue:
    """Phi(e^m, k, b) = sum_{j>=0} e^{m j} / (j + b)^k = b^-k + e^{-m b} E^m_k(b)."""
    b = p.b
    if b == 0:
        raise ZeroB("Phi(e^m, k, b) needs b != 0")
    if b.imag == 0 and b.real == round(b.real) and b.real < 0:
        raise PoleInRange(f"j + b vanishes at j = {int(-b.real)}")
    e = lerch_e_sum(p, opts)
    value = b ** (-p.k) + cmath.exp(-p.m * b) * e.value
    return ContinuationValue(value, e.is_continuation)


def polylog(k: int, m, opts: Optional[QuadOptions] = None) -> ContinuationValue:
    """Li_k(e^m) = sum_{j>=1} e^{m j} / j^k, continued to Re(m) > 0."""
    m = complex(m)
    if int(k) != k or k < 1:
        raise DomainError("k must be a positive integer")
    k = int(k)
    check_m(m)
    F = math.factorial(k - 1)
    parts = [-(m ** (k - 1)) / F * cmath.log(-m / TWO_PI)]
    parts += [m ** (k - j) / math.factorial(k - j) * oracle.zeta_int(j) for j in range(0, k + 1) if j != 1]
    rest = _fsum_c(parts)

    def f(u):
        return (1 - u) ** (k - 1) * coth(m * u / 2) - TWO_PI / m * (1 - u) * cot_pi(u)

    weight = -(m**k) / (2 * F)
    res = integrate_scaled(Integrand(f), weight, rest, opts, min_panels=_panels(m, 0))
    value = _refine(rest + weight * res.value, parts + [weight * res.value],
                    lambda dps: _e_sum_mp(m, k, 0j, Regime.INTEGER, dps), opts, _first_term(m, k, 0j))
    return ContinuationValue(value, m.real > 0)


# -- extended precision ---------------------------------------------------------------

EPS = 2.220446049250313e-16


def _first_term(m: complex, k: int, b: complex) -> Optional[float]:
    """|e^{m(1+b)} / (1+b)^k|, which sets the size of E^m_k(b) when Re(m) < 0."""
    if m.real >= 0:
        return None
    return math.exp(m.real * (1 + b.real) - m.imag * b.imag) / abs(1 + b) ** k


def _refine(value: complex, terms, evaluate, opts: Optional[QuadOptions], size: Optional[float] = None) -> complex:
    """Re-evaluate in extended precision when the terms of the closed form are
    so much larger than their sum that double rounding alone could exceed
    rel_tol (typically Re(m) << 0, where the sum is exponentially small).

    ``size`` is an a-priori estimate of |value|; without it the double result
    is used, and the precision is raised until it stops growing."""
    rel_tol = (opts or QuadOptions()).rel_tol
    scale = max(abs(complex(t)) for t in terms)
    mag = min(abs(value), size) if size is not None else abs(value)
    if EPS * scale <= rel_tol * mag:
        return value
    dps = 0
    for _ in range(6):
        digits = max(30, math.log10(scale / max(mag, 1e-300)) - math.log10(rel_tol) + 10)
        if digits <= dps:
            break
        dps = int(digits) + 1
        value = evaluate(dps)
        mag = abs(value)
    return value


def _e_sum_mp(m: complex, k: int, b: complex, regime: Regime, dps: int) -> complex:
    """lerch_e_sum's closed form (b already snapped to its regime) in mpmath."""
    import mpmath as mp

    with mp.workdps(dps):
        m, b = mp.mpc(m), mp.mpc(b)
        F = mp.factorial(k - 1)
        mk1 = m ** (k - 1) / F
        pi = mp.pi

        def br(K):
            if b == 0:
                # the integer-branch bracket tends to m^k / k! as b -> 0
                return m**k / mp.factorial(k) if K == k - 1 else mp.mpf(0)
            z = m * b
            return (mp.exp(z) - mp.fsum(z**j / mp.factorial(j) for j in range(K + 1))) / b**k

        zeta = [m ** (k - j) / mp.factorial(k - j) * mp.zeta(j, b + 1) for j in range(2, k + 1)]
        if regime is Regime.GENERIC:
            s = mp.sin(2 * pi * b)
            head = [-br(k - 2) / 2, pi * mk1 / 2 * mp.cot(pi * b), -mk1 * mp.log(-m / (2 * pi))]

            def f(u):
                return ((1 - u) ** (k - 1) * mp.exp(m * b * u) * mp.coth(m * u / 2)
                        + 2 * pi / m * (-1 + mp.sin(2 * pi * b * u) / s) * mp.cot(pi * u))
        elif regime is Regime.HALF_INTEGER:
            head = [-br(k - 2) / 2, -mk1 * mp.log(-m / pi)]

            def f(u):
                return (1 - u) ** (k - 1) * mp.exp(m * b * u) * mp.coth(m * u / 2) - pi / m * mp.cos(pi * b * u) * mp.cot(pi * u / 2)
        else:
            nb = int(mp.nint(b.real))
            head = [-br(k - 1) / 2, -mk1 * mp.log(-m / (2 * pi)), -mk1 * mp.fsum(mp.mpf(1) / j for j in range(1, nb + 1))]

            def f(u):
                return (1 - u) ** (k - 1) * mp.exp(m * b * u) * mp.coth(m * u / 2) - 2 * pi / m * (1 - u) * mp.cot(pi * u)

        # split so each piece resolves about one oscillation of e^{m b u} and coth(m u / 2)
        pieces = max(2, int(abs(m) * (abs(b) + 1) / (2 * float(pi))) + 2)
        integral = mp.quad(f, mp.linspace(0, 1, pieces + 1))
        return complex(mp.fsum(head + zeta) - m**k / (2 * F) * integral)


def exp_via_zeta(m, k: int) -> complex:
    """sum_{j=2..k} m^(k-j) zeta(j) / (k-j)!, which tends to e^m as k grows."""
    if int(k) != k or k < 2:
        raise DomainError("k must be an integer >= 2")
    k = int(k)
    m = complex(m)
    return _fsum_c(m ** (k - j) / math.factorial(k - j) * oracle.zeta_int(j) for j in range(2, k + 1))
