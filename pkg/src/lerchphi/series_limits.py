"""Closed forms for the full Fourier series

    C^m_k(b) = sum_{j>=1} cos(2 pi (j + b) / m) / (j + b)^k
    S^m_k(b) = sum_{j>=1} sin(2 pi (j + b) / m) / (j + b)^k

for real |m| >= 1.  The even-cos and odd-sin families have one formula for
all b.  The odd-cos and even-sin families carry cot(pi b) and
1/sin(2 pi b) and therefore split into generic, half-integer and integer b.
Riemann and Hurwitz zeta values are taken from :mod:`lerchphi.oracle`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import oracle
from ._taylor import bracket
from .errors import DivergentSeries, DomainError, FormulaBreakdown, NearSingularRegime, PoleInRange
from .harmonic import NEAR_SINGULAR, harmonic_number
from .quadrature import Integrand, QuadOptions, cot_pi, integrate_scaled, oscillation_panels
from .regime import BClass, Regime, classify_b

_fact = math.factorial


@dataclass(frozen=True)
class SeriesSpec:
    trig: str
    order: int
    m: complex
    b: complex = 0j

    def __post_init__(self):
        if self.trig not in ("cos", "sin"):
            raise DomainError("trig must be 'cos' or 'sin'")
        if int(self.order) != self.order or self.order < 1:
            raise DomainError("order must be a positive integer")
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "m", complex(self.m))
        object.__setattr__(self, "b", complex(self.b))
        if self.m == 0:
            raise DomainError("m must be non-zero")

    @property
    def best_effort(self) -> bool:
        """Complex m: the formulas are evaluated but not guaranteed."""
        return self.m.imag != 0


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    regime: BClass
    best_effort: bool

    def __complex__(self):
        return complex(self.value)


def _check_spec(spec: SeriesSpec) -> None:
    m = spec.m
    if not spec.best_effort and abs(m) < 1:
        raise DomainError(f"the closed forms need |m| >= 1, got m = {m.real:g}")
    b = spec.b
    if b.imag == 0 and b.real == round(b.real) and b.real <= -1:
        raise PoleInRange(f"j + b vanishes at j = {int(-b.real)}")
    if spec.order == 1 and abs(abs(m) - 1) < 1e-12:
        # the terms are a fixed multiple of 1/(j+b): either divergent or all zero
        c = cmath.cos(2 * math.pi * b) if spec.trig == "cos" else cmath.sin(2 * math.pi * b)
        name = f"{'C' if spec.trig == 'cos' else 'S'}^1_1"
        if abs(c) < 1e-12:
            raise FormulaBreakdown(f"{name}: the series is 0 but the closed form does not apply at |m| = 1")
        raise DivergentSeries(f"{name}: the series diverges at |m| = 1")


def _fsum_c(parts) -> complex:
    return complex(math.fsum(p.real for p in parts), math.fsum(complex(p).imag for p in parts))


def _integral(f, weight, rest, opts, panels: int = 8) -> complex:
    res = integrate_scaled(Integrand(f), weight, rest, opts, min_panels=panels)
    return rest + weight * res.value


def _log_integral(p: int, m: complex, t: complex, b: complex, regime: Regime,
                  prefactor: complex, rest: complex, opts) -> complex:
    """rest + prefactor * L, where L is the regime-dependent log/cot/integral block."""
    logm = math.log(abs(m))
    if regime is Regime.GENERIC:
        s = cmath.sin(2 * math.pi * b)
        head = math.pi / 2 * complex(cot_pi(b)) + logm

        def f(u):
            return ((1 - u) ** p * np.cos(t * b * u) * cot_pi(u / m)
                    + m * (-1 + np.sin(2 * np.pi * b * u) / s) * cot_pi(u))
    elif regime is Regime.HALF_INTEGER:
        head = logm - math.log(2.0)

        def f(u):
            return (1 - u) ** p * np.cos(t * b * u) * cot_pi(u / m) - m / 2 * np.cos(np.pi * b * u) * cot_pi(u / 2)
    else:
        head = logm - harmonic_number(1, round(b.real))

        def f(u):
            return (1 - u) ** p * np.cos(t * b * u) * cot_pi(u / m) - m * (1 - u) * cot_pi(u)

    rest = rest + prefactor * head
    return _integral(f, -prefactor * math.pi / m, rest, opts, oscillation_panels(abs(b), m))


def _odd_cos(k: int, m: complex, b: complex, cls: BClass, opts) -> complex:
    t = 2 * math.pi / m
    K = k if cls.regime is Regime.INTEGER else k - 1
    parts = [-0.5 * bracket("cos", t, b, K, 2 * k + 1)]
    parts += [(-1) ** (k - j) / _fact(2 * k - 2 * j) * t ** (2 * k - 2 * j)
              * oracle.hurwitz_zeta_int(2 * j + 1, b + 1) for j in range(1, k + 1)]
    A = (-1) ** k / _fact(2 * k) * t ** (2 * k)
    return _log_integral(2 * k, m, t, b, cls.regime, A, _fsum_c(parts), opts)


def _even_sin(k: int, m: complex, b: complex, cls: BClass, opts) -> complex:
    t = 2 * math.pi / m
    K = k - 1 if cls.regime is Regime.INTEGER else k - 2
    parts = [-0.5 * bracket("sin", t, b, K, 2 * k)]
    parts += [-((-1) ** (k - j)) / _fact(2 * k - 1 - 2 * j) * t ** (2 * k - 1 - 2 * j)
              * oracle.hurwitz_zeta_int(2 * j + 1, b + 1) for j in range(1, k)]
    A = (-1) ** k / _fact(2 * k - 1) * t ** (2 * k - 1)
    return _log_integral(2 * k - 1, m, t, b, cls.regime, -A, _fsum_c(parts), opts)


def _even_cos(k: int, m: complex, b: complex, opts) -> complex:
    t = 2 * math.pi / m
    parts = [-0.5 * bracket("cos", t, b, k - 1, 2 * k)]
    parts += [(-1) ** (k - j) / _fact(2 * k - 2 * j) * t ** (2 * k - 2 * j)
              * oracle.hurwitz_zeta_int(2 * j, b + 1) for j in range(1, k + 1)]
    parts.append((-1) ** k * abs(m) / (4 * _fact(2 * k - 1)) * t ** (2 * k))
    weight = -((-1) ** k) / (2 * _fact(2 * k - 1)) * t ** (2 * k)
    p = 2 * k - 1
    return _integral(lambda u: (1 - u) ** p * np.sin(t * b * u) * cot_pi(u / m),
                     weight, _fsum_c(parts), opts, oscillation_panels(abs(b), m))


def _odd_sin(k: int, m: complex, b: complex, opts) -> complex:
    t = 2 * math.pi / m
    parts = [-0.5 * bracket("sin", t, b, k - 1, 2 * k + 1)]
    parts += [(-1) ** (k - j) / _fact(2 * k + 1 - 2 * j) * t ** (2 * k + 1 - 2 * j)
              * oracle.hurwitz_zeta_int(2 * j, b + 1) for j in range(1, k + 1)]
    parts.append((-1) ** k * abs(m) / (4 * _fact(2 * k)) * t ** (2 * k + 1))
    weight = -((-1) ** k) / (2 * _fact(2 * k)) * t ** (2 * k + 1)
    p = 2 * k
    return _integral(lambda u: (1 - u) ** p * np.sin(t * b * u) * cot_pi(u / m),
                     weight, _fsum_c(parts), opts, oscillation_panels(abs(b), m))


def fourier_series_b(spec: SeriesSpec, opts: Optional[QuadOptions] = None) -> SeriesValue:
    """Closed form of C^m_k(b) or S^m_k(b) with regime dispatch on b."""
    _check_spec(spec)
    cls = classify_b(spec.b)
    # snap (half-)integers so the regime formulas see exact values
    if cls.regime is Regime.INTEGER:
        b = complex(cls.nearest_integer)
    elif cls.regime is Regime.HALF_INTEGER:
        b = complex(round(2 * cls.b.real) / 2)
    else:
        b = cls.b
    m, order = spec.m, spec.order
    odd = order % 2 == 1
    k = (order - 1) // 2 if odd else order // 2
    family_split = (spec.trig == "cos") == odd
    if family_split and cls.regime is Regime.GENERIC and abs(cmath.sin(2 * math.pi * b)) < NEAR_SINGULAR:
        raise NearSingularRegime(f"b = {b} is too close to a half-integer or integer")
    if spec.trig == "cos":
        value = _odd_cos(k, m, b, cls, opts) if odd else _even_cos(k, m, b, opts)
    else:
        value = _odd_sin(k, m, b, opts) if odd else _even_sin(k, m, b, cls, opts)
    if not spec.best_effort and b.imag == 0:
        value = complex(value.real, 0.0)
    return SeriesValue(value, cls, spec.best_effort)


def fourier_series_b0(spec: SeriesSpec, opts: Optional[QuadOptions] = None) -> SeriesValue:
    """Closed form of C^m_k or S^m_k at b = 0, written with zeta(j) and log|m|."""
    if spec.b != 0:
        raise DomainError("fourier_series_b0 needs b = 0")
    _check_spec(spec)
    m, order = spec.m, spec.order
    t = 2 * math.pi / m
    odd = order % 2 == 1
    k = (order - 1) // 2 if odd else order // 2
    zeta = oracle.zeta_int
    cls = classify_b(0.0)

    if spec.trig == "cos" and not odd:
        parts = [(-1) ** (k - j) / _fact(2 * k - 2 * j) * t ** (2 * k - 2 * j) * zeta(2 * j) for j in range(0, k + 1)]
        parts.append((-1) ** k * abs(m) / (4 * _fact(2 * k - 1)) * t ** (2 * k))
        value = _fsum_c(parts)
    elif spec.trig == "sin" and odd:
        parts = [(-1) ** (k - j) / _fact(2 * k + 1 - 2 * j) * t ** (2 * k + 1 - 2 * j) * zeta(2 * j) for j in range(0, k + 1)]
        parts.append((-1) ** k * abs(m) / (4 * _fact(2 * k)) * t ** (2 * k + 1))
        value = _fsum_c(parts)
    else:
        if spec.trig == "cos":
            p = 2 * k
            parts = [(-1) ** (k - j) / _fact(2 * k - 2 * j) * t ** (2 * k - 2 * j) * zeta(2 * j + 1) for j in range(1, k + 1)]
            parts.append((-1) ** k / _fact(2 * k) * t ** (2 * k) * math.log(abs(m)))
            weight = -((-1) ** k) / (2 * _fact(2 * k)) * t ** (2 * k + 1)
        else:
            p = 2 * k - 1
            parts = [-((-1) ** (k - j)) / _fact(2 * k - 1 - 2 * j) * t ** (2 * k - 1 - 2 * j) * zeta(2 * j + 1) for j in range(1, k)]
            parts.append(-((-1) ** k) / _fact(2 * k - 1) * t ** (2 * k - 1) * math.log(abs(m)))
            weight = (-1) ** k / (2 * _fact(2 * k - 1)) * t ** (2 * k)

        def f(u):
            return (1 - u) ** p * cot_pi(u / m) - m * (1 - u) * cot_pi(u)

        value = _integral(f, weight, _fsum_c(parts), opts)
    if not spec.best_effort:
        value = complex(value.real, 0.0)
    return SeriesValue(value, cls, spec.best_effort)
