"""Closed forms for finite Fourier and exponential sums over a*j + b.

With t = 2 pi / m and the four trigonometric kinds

    C_{2k}   = sum cos(t (a j + b)) / (a j + b)^{2k}      (k >= 1)
    S_{2k+1} = sum sin(t (a j + b)) / (a j + b)^{2k+1}    (k >= 0)
    C_{2k+1} = sum cos(t (a j + b)) / (a j + b)^{2k+1}    (k >= 0)
    S_{2k}   = sum sin(t (a j + b)) / (a j + b)^{2k}      (k >= 1)

each sum over 1 <= j <= n equals two Taylor-remainder brackets (at b and at
a n + b), a combination of HP_i(n) values, and one integral over [0, 1]
against cot(pi a u / m).  The exponential sum sum e^{m (j + b)} / (j + b)^k
has the same structure with coth(m u / 2) as kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import kernels
from ._taylor import bracket
from .errors import CothPole, DomainError
from .harmonic import check_poles, harmonic_progression
from .quadrature import Integrand, QuadOptions, coth, cot_pi, integrate_scaled, oscillation_panels


class TrigKind(str, Enum):
    COS_EVEN = "cos-even"
    SIN_ODD = "sin-odd"
    COS_ODD = "cos-odd"
    SIN_EVEN = "sin-even"

    @property
    def trig(self) -> str:
        return "cos" if self in (TrigKind.COS_EVEN, TrigKind.COS_ODD) else "sin"

    def order(self, k: int) -> int:
        return 2 * k if self in (TrigKind.COS_EVEN, TrigKind.SIN_EVEN) else 2 * k + 1

    @property
    def min_k(self) -> int:
        return 1 if self in (TrigKind.COS_EVEN, TrigKind.SIN_EVEN) else 0


@dataclass(frozen=True)
class SumParams:
    a: complex
    b: complex
    m: complex
    k: int
    n: int

    def __post_init__(self):
        for name in ("a", "b", "m"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if isinstance(self.n, complex) or int(self.n) != self.n or self.n < 1:
            raise DomainError("n must be a positive integer")
        if int(self.k) != self.k or self.k < 0:
            raise DomainError("k must be a non-negative integer")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "k", int(self.k))
        if self.m == 0:
            raise DomainError("m must be non-zero")
        check_poles(self.a, self.b, self.n)


def _check_kind(kind: TrigKind, k: int) -> None:
    if k < kind.min_k:
        raise DomainError(f"{kind.value} needs k >= {kind.min_k}")


# -- direct sums -----------------------------------------------------------------------


def _fsum_c(z) -> complex:
    z = np.asarray(z, dtype=complex)
    return complex(math.fsum(z.real), math.fsum(z.imag))


def trig_partial_direct(kind: TrigKind, p: SumParams) -> complex:
    """sum_{j=1..n} trig(2 pi (a j + b) / m) / (a j + b)^order, compensated."""
    kind = TrigKind(kind)
    _check_kind(kind, p.k)
    z = p.a * np.arange(1, p.n + 1, dtype=float) + p.b
    trig = np.cos if kind.trig == "cos" else np.sin
    return _fsum_c(trig(2 * np.pi * z / p.m) / z ** kind.order(p.k))


def lerch_partial_direct(p: SumParams) -> complex:
    """sum_{j=1..n} e^{m (j + b)} / (j + b)^k."""
    if p.k < 1:
        raise DomainError("k must be >= 1")
    return kernels.phase_power_sum(p.m, 1.0, p.b, p.k, 1, p.n)


# -- closed forms ----------------------------------------------------------------------


def trig_partial_closed(kind: TrigKind, p: SumParams, opts: Optional[QuadOptions] = None) -> complex:
    """Closed form of the trigonometric partial sum of the given kind."""
    kind = TrigKind(kind)
    k = p.k
    _check_kind(kind, k)
    a, b, m, n = p.a, p.b, p.m, p.n
    t = 2 * math.pi / m
    end = a * n + b
    fact = math.factorial

    if kind is TrigKind.COS_EVEN:
        tay, K, P = "cos", k, 2 * k
        hp = [((-1) ** (k - j) / fact(2 * k - 2 * j) * t ** (2 * k - 2 * j), 2 * j) for j in range(1, k + 1)]
        weight = (-1) ** k / (2 * fact(2 * k - 1)) * t ** (2 * k)
        upow, diff = 2 * k - 1, np.sin
    elif kind is TrigKind.SIN_ODD:
        tay, K, P = "sin", k, 2 * k + 1
        hp = [((-1) ** (k - j) / fact(2 * k + 1 - 2 * j) * t ** (2 * k + 1 - 2 * j), 2 * j) for j in range(1, k + 1)]
        weight = (-1) ** k / (2 * fact(2 * k)) * t ** (2 * k + 1)
        upow, diff = 2 * k, np.sin
    elif kind is TrigKind.COS_ODD:
        tay, K, P = "cos", k, 2 * k + 1
        hp = [((-1) ** (k - j) / fact(2 * k - 2 * j) * t ** (2 * k - 2 * j), 2 * j + 1) for j in range(0, k + 1)]
        weight = (-1) ** k / (2 * fact(2 * k)) * t ** (2 * k + 1)
        upow, diff = 2 * k, np.cos
    else:
        tay, K, P = "sin", k - 1, 2 * k
        hp = [(-((-1) ** (k - j)) / fact(2 * k - 1 - 2 * j) * t ** (2 * k - 1 - 2 * j), 2 * j + 1) for j in range(0, k)]
        weight = -((-1) ** k) / (2 * fact(2 * k - 1)) * t ** (2 * k)
        upow, diff = 2 * k - 1, np.cos

    parts = [-0.5 * bracket(tay, t, b, K, P), 0.5 * bracket(tay, t, end, K, P)]
    parts += [c * harmonic_progression(order, a, b, n) for c, order in hp]
    rest = _fsum_c(parts)

    def f(u):
        return (1.0 - u) ** upow * (diff(t * end * u) - diff(t * b * u)) * cot_pi(a * u / m)

    panels = oscillation_panels(abs(end), m)
    res = integrate_scaled(Integrand(f), weight, rest, opts, min_panels=panels)
    return rest + weight * res.value


def check_coth_pole(m) -> None:
    """coth(m u / 2) has a pole in (0, 1] iff m = 2 pi i j / u, i.e. m on the
    imaginary axis with |Im m| >= 2 pi."""
    m = complex(m)
    if abs(m.real) <= 1e-12 * abs(m) and abs(m.imag) >= 2 * math.pi * (1 - 1e-12):
        raise CothPole(f"coth(m u / 2) has a pole in (0, 1] for m = {m}")


def lerch_partial_closed(p: SumParams, opts: Optional[QuadOptions] = None) -> complex:
    """Closed form of sum_{j=1..n} e^{m (j + b)} / (j + b)^k (a must be 1)."""
    if p.a != 1:
        raise DomainError("the exponential closed form is stated for a = 1")
    k = p.k
    if k < 1:
        raise DomainError("k must be >= 1")
    b, m, n = p.b, p.m, p.n
    check_coth_pole(m)
    end = n + b
    fact = math.factorial
    parts = [-0.5 * bracket("exp", m, b, k, k), 0.5 * bracket("exp", m, end, k, k)]
    parts += [m ** (k - j) / fact(k - j) * harmonic_progression(j, 1.0, b, n) for j in range(1, k + 1)]
    rest = _fsum_c(parts)
    weight = m**k / (2 * fact(k - 1))

    def f(u):
        return (1.0 - u) ** (k - 1) * (np.exp(m * end * u) - np.exp(m * b * u)) * coth(m * u / 2)

    panels = oscillation_panels(abs(m * end) / (2 * math.pi), 1.0)
    res = integrate_scaled(Integrand(f), weight, rest, opts, min_panels=panels)
    value = rest + weight * res.value
    # rest and weight * I can be many orders larger than their sum when
    # Re(m) << 0; redo the evaluation in extended precision if double
    # rounding alone could exceed the requested tolerance
    scale = max([abs(complex(x)) for x in parts] + [abs(weight * res.value)])
    rel_tol = (opts or QuadOptions()).rel_tol
    if EPS * scale > rel_tol * abs(value):
        value = _lerch_partial_mp(p, scale / max(abs(value), 1e-300), rel_tol)
    return value


EPS = 2.220446049250313e-16


def _lerch_partial_mp(p: SumParams, cond: float, rel_tol: float) -> complex:
    """The exponential closed form in mpmath with digits to cover cond."""
    import mpmath as mp

    digits = int(math.log10(max(cond, 1.0)) - math.log10(rel_tol)) + 10
    with mp.workdps(max(30, digits)):
        k, n = p.k, p.n
        m, b = mp.mpc(p.m), mp.mpc(p.b)
        end = b + n

        def br(x):
            z = m * x
            return (mp.exp(z) - mp.fsum(z**j / mp.factorial(j) for j in range(k + 1))) / x**k

        parts = [-br(b) / 2, br(end) / 2]
        parts += [m ** (k - j) / mp.factorial(k - j) * mp.fsum((i + b) ** -j for i in range(1, n + 1))
                  for j in range(1, k + 1)]

        def f(u):
            return (1 - u) ** (k - 1) * (mp.exp(m * end * u) - mp.exp(m * b * u)) * mp.coth(m * u / 2)

        # geometric splits resolve the boundary layer of width 1/|m (n + b)| at u = 0
        w = 1 / abs(m * end)
        pts = [mp.mpf(0)]
        while w < 0.5:
            pts.append(w)
            w *= 4
        pts.append(mp.mpf(1))
        integral = mp.quad(f, pts)
        return complex(mp.fsum(parts) + m**k / (2 * mp.factorial(k - 1)) * integral)
