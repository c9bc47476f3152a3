"""Generalized harmonic numbers and progressions.

HP_k(n) = sum_{j=1..n} (a j + b)^(-k).  For a = k = 1 the difference
HP(n) - H(n) tends to a constant c(b), computed here from its integral
representations; c(b) = -gamma - psi(b + 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import NearSingularRegime, PoleAtNegativeInteger, PoleInRange, SingularSine
from .quadrature import Integrand, QuadOptions, cot_pi, integrate_scaled
from .regime import REGIME_TOL, BClass, Regime, classify_b

NEAR_SINGULAR = 1e-6


@dataclass(frozen=True)
class HarmonicParams:
    k: int
    b: complex
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        check_poles(1.0, self.b, self.n)


@dataclass(frozen=True)
class AsymptoticConstant:
    b: complex
    value: complex
    regime: BClass


def check_poles(a, b, n: int) -> None:
    """Raise PoleInRange if a*j + b = 0 for some 1 <= j <= n."""
    a, b = complex(a), complex(b)
    if a == 0:
        if b == 0 and n >= 1:
            raise PoleInRange("a = b = 0")
        return
    j = -b / a
    if abs(j.imag) < 1e-12 * max(1.0, abs(j)):
        jr = round(j.real)
        if 1 <= jr <= n and abs(a * jr + b) <= 1e-12 * max(abs(a * jr), abs(b)):
            raise PoleInRange(f"a*j + b vanishes at j = {jr}")


def harmonic_number(k: int, n: int) -> float:
    """H_k(n) = sum_{j=1..n} j^(-k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be non-negative")
    return kernels.power_sum(k, 1.0, 0.0, n).real


def harmonic_progression(k: int, a, b, n: int) -> complex:
    """HP_k(n) = sum_{j=1..n} (a j + b)^(-k); HP_0 is identically 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n < 0:
        raise ValueError("n must be non-negative")
    if k == 0:
        return 0j
    check_poles(a, b, n)
    return kernels.power_sum(k, a, b, n)


# -- the odd-zeta integral -----------------------------------------------------------


def _odd_zeta_integrand(b: complex) -> Integrand:
    """(sin(2 pi b u)/sin(2 pi b) - u) cot(pi u), with its limits at 0 and 1."""
    s = cmath.sin(2 * math.pi * b)

    def f(u):
        return (np.sin(2 * np.pi * b * u) / s - u) * cot_pi(u)

    at0 = (2 * b / s - 1.0 / math.pi)
    at1 = (2 * math.pi * b * cmath.cos(2 * math.pi * b) / s - 1.0) / math.pi
    return Integrand(f, (at0, at1))


def zeta_odd_generating(x, opts: Optional[QuadOptions] = None) -> complex:
    """sum_{k>=1} zeta(2k+1) x^(2k+1) for |x| < 1, by its integral representation.

    The integral itself is defined whenever sin(2 pi x) != 0.
    """
    x = complex(x)
    if x == 0:
        return 0j
    two_x = 2 * x
    if abs(two_x - round(two_x.real)) < REGIME_TOL:
        raise SingularSine(f"sin(2 pi x) vanishes at x = {x}")
    weight = -math.pi * x
    res = integrate_scaled(_odd_zeta_integrand(x), weight, 0.0, opts)
    return weight * res.value


def hp_asymptotic_constant(b, opts: Optional[QuadOptions] = None) -> AsymptoticConstant:
    """c(b) = lim (HP(n) - H(n)) for a = 1, k = 1."""
    cls = classify_b(b)
    b = cls.b
    if cls.regime is Regime.INTEGER:
        nb = cls.nearest_integer
        if nb < 0:
            raise PoleAtNegativeInteger(f"b = {nb} puts a pole in every tail of HP(n)")
        return AsymptoticConstant(b, complex(-harmonic_number(1, nb)), cls)
    if cls.regime is Regime.HALF_INTEGER:
        def f(u):
            return (-1.0 + u + np.cos(np.pi * b * u)) * cot_pi(u / 2)

        rest = -0.5 / b
        res = integrate_scaled(Integrand(f, (2.0 / math.pi, 0.0)), math.pi / 2, rest, opts)
        return AsymptoticConstant(b, rest + math.pi / 2 * res.value, cls)
    if abs(cmath.sin(2 * math.pi * b)) < NEAR_SINGULAR:
        raise NearSingularRegime(f"b = {b} is too close to a half-integer or integer")
    rest = -0.5 / b + math.pi / 2 * complex(cot_pi(b))
    res = integrate_scaled(_odd_zeta_integrand(b), -math.pi, rest, opts)
    return AsymptoticConstant(b, rest - math.pi * res.value, cls)
