"""Reference values used to validate the closed forms.

Nothing in here calls the formula modules: zeta values come from
Euler-Maclaurin, digamma from the asymptotic series, and series values from
compensated direct summation with an explicit bound on the truncated tail.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from . import kernels
from .errors import DomainError, NoConvergence, PoleAtNonPositiveInteger, PoleAtOne, PoleInRange

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_16; kept local so the oracle shares no tables with `hurwitz`
_B2P = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)
_EM_TERMS = 8
_EM_SPLIT = 20
MAX_TERMS = 10**8


class TailKind(str, Enum):
    GEOMETRIC = "geometric"
    INTEGRAL_COMPARISON = "integral-comparison"
    ALTERNATING_LEIBNIZ = "alternating-leibniz"
    SUMMATION_BY_PARTS = "summation-by-parts"


@dataclass(frozen=True)
class TailBound:
    kind: TailKind
    bound: float


@dataclass(frozen=True)
class OracleSum:
    value: complex
    terms: int
    tail: TailBound

    def __complex__(self):
        return complex(self.value)


# -- tail policies for sum_series -------------------------------------------------


@dataclass(frozen=True)
class Geometric:
    """|term(j+1)| <= ratio * |term(j)| beyond the truncation point."""

    ratio: float


@dataclass(frozen=True)
class IntegralComparison:
    """Positive decreasing terms; ``tail_integral(N)`` bounds sum_{j>N} term(j)."""

    tail_integral: Callable[[int], float]


@dataclass(frozen=True)
class AlternatingLeibniz:
    """Alternating series with terms decreasing in magnitude."""


def _tail_bound(policy, term, n: int) -> TailBound:
    if isinstance(policy, Geometric):
        if not 0 <= policy.ratio < 1:
            raise DomainError("geometric tail needs 0 <= ratio < 1")
        return TailBound(TailKind.GEOMETRIC, abs(term(n + 1)) / (1.0 - policy.ratio))
    if isinstance(policy, IntegralComparison):
        return TailBound(TailKind.INTEGRAL_COMPARISON, float(policy.tail_integral(n)))
    if isinstance(policy, AlternatingLeibniz):
        return TailBound(TailKind.ALTERNATING_LEIBNIZ, abs(term(n + 1)))
    raise TypeError(f"unknown tail policy {policy!r}")


def sum_series(term: Callable[[int], complex], tail, target_abs_err: float = 1e-15,
               start: int = 1, max_terms: int = MAX_TERMS) -> OracleSum:
    """Sum ``term(j)`` for j >= start until the declared tail bound drops below target.

    The caller is responsible for the series actually belonging to the class
    named by ``tail``.  Summation order is fixed, so results are reproducible.
    """
    re_parts: list[float] = []
    im_parts: list[float] = []
    j = start
    check_every = 1
    while True:
        t = complex(term(j))
        re_parts.append(t.real)
        im_parts.append(t.imag)
        if (j - start + 1) % check_every == 0:
            bound = _tail_bound(tail, term, j)
            if bound.bound <= target_abs_err:
                value = complex(math.fsum(re_parts), math.fsum(im_parts))
                return OracleSum(value, j - start + 1, bound)
            check_every = min(check_every * 2, 4096)
        if j - start + 1 >= max_terms:
            raise NoConvergence(f"tail bound above {target_abs_err:g} after {max_terms} terms")
        j += 1


# -- zeta and digamma ----------------------------------------------------------------


def _real_out(x, like):
    return x.real if not isinstance(like, complex) else x


def hurwitz_zeta_int(s: int, q):
    """Hurwitz zeta(s, q) for integer s >= 2 by Euler-Maclaurin.

    The first N terms are summed directly with N = 20 (raised so that
    Re(N + q) >= 20), then eight Bernoulli corrections are applied.
    """
    if s == 1:
        raise PoleAtOne("zeta(s, q) has a pole at s = 1")
    if s < 2 or int(s) != s:
        raise DomainError(f"integer s >= 2 required, got {s}")
    s = int(s)
    qc = complex(q)
    if qc.imag == 0 and qc.real <= 0 and qc.real == round(qc.real):
        raise PoleAtNonPositiveInteger(f"q = {q} is a non-positive integer")
    n = _EM_SPLIT + max(0, math.ceil(-qc.real))
    head = [(j + qc) ** (-s) for j in range(n)]
    x = n + qc
    corr = [x ** (1 - s) / (s - 1), 0.5 * x ** (-s)]
    rising = float(s)  # s (s+1) ... (s + 2p - 2)
    fact = 2.0  # (2p)!
    for p in range(1, _EM_TERMS + 1):
        corr.append(_B2P[p - 1] / fact * rising * x ** (-s - 2 * p + 1))
        rising *= (s + 2 * p - 1) * (s + 2 * p)
        fact *= (2 * p + 1) * (2 * p + 2)
    parts = head + corr
    value = complex(math.fsum(z.real for z in parts), math.fsum(z.imag for z in parts))
    return _real_out(value, q)


def zeta_int(s: int) -> float:
    """Riemann zeta at an integer s >= 2, plus zeta(0) = -1/2."""
    if s == 0:
        return -0.5
    return float(hurwitz_zeta_int(s, 1.0))


def euler_gamma() -> float:
    return EULER_GAMMA


def digamma(z):
    """psi(z) via upward recurrence to Re(z) >= 10 and the asymptotic series."""
    zc = complex(z)
    if zc.imag == 0 and zc.real <= 0 and zc.real == round(zc.real):
        raise PoleAtNonPositiveInteger(f"digamma has a pole at {z}")
    shift = max(0, math.ceil(10.0 - zc.real))
    recips = [1.0 / (zc + i) for i in range(shift)]
    w = zc + shift
    w2 = w * w
    series = [cmath.log(w), -0.5 / w]
    wp = w2
    for p in range(1, _EM_TERMS + 1):
        series.append(-_B2P[p - 1] / (2 * p * wp))
        wp *= w2
    parts = series + [-r for r in recips]
    value = complex(math.fsum(t.real for t in parts), math.fsum(t.imag for t in parts))
    return _real_out(value, z)


# -- direct summation oracles -----------------------------------------------------------


def _check_offset_poles(b, start: int = 1):
    bc = complex(b)
    if bc.imag == 0 and bc.real == round(bc.real) and -bc.real >= start:
        raise PoleInRange(f"j + b vanishes at j = {int(-bc.real)}")


def exp_series(m, k: int, b, start: int = 1, target_abs_err: float = 1e-17) -> OracleSum:
    """sum_{j>=start} exp(m (j+b)) / (j+b)^k for Re(m) < 0, with a geometric tail bound."""
    m, b = complex(m), complex(b)
    if m.real >= 0:
        raise DomainError("direct summation needs Re(m) < 0")
    _check_offset_poles(b, start)
    ratio = math.exp(m.real)
    # beyond j0 the moduli |j+b| increase, so the terms shrink at least geometrically
    j0 = max(start, math.ceil(abs(b)) + 1)

    def term_abs(j):
        return math.exp(m.real * j + (m * b).real) / abs(j + b) ** k

    n = j0 + 16
    while term_abs(n + 1) / (1.0 - ratio) > target_abs_err:
        if n > MAX_TERMS:
            raise NoConvergence("exp_series: tail bound not reached")
        n = int(n * 1.5) + 16
    value = kernels.phase_power_sum(m, 1.0, b, k, start, n)
    return OracleSum(value, n - start + 1, TailBound(TailKind.GEOMETRIC, term_abs(n + 1) / (1.0 - ratio)))


def polylog_series(k: int, m) -> OracleSum:
    """Li_k(e^m) = sum_{j>=1} e^{m j} / j^k for Re(m) < 0."""
    return exp_series(m, k, 0.0)


def lerch_phi_series(m, k: int, b) -> OracleSum:
    """Phi(e^m, k, b) = sum_{j>=0} e^{m j} / (j+b)^k for Re(m) < 0."""
    s = exp_series(m, k, b, start=0)
    scale = cmath.exp(-complex(m) * complex(b))
    return OracleSum(s.value * scale, s.terms, TailBound(s.tail.kind, s.tail.bound * abs(scale)))


def _phase_tail(w, b, k: int, n: int):
    """Tail sum_{j>n} e^{w(j+b)} / (j+b)^k for |e^w| = 1, e^w != 1.

    Three rounds of summation by parts; returns (estimate, bound).
    """
    z = cmath.exp(w)
    one_minus = 1.0 - z
    mm = n + 1

    def f(j):
        return (j + b) ** (-k)

    d1 = f(mm + 1) - f(mm)
    d2_at = (f(mm + 2) - f(mm + 1)) - (f(mm + 1) - f(mm))
    est = (cmath.exp(w * mm) * f(mm) / one_minus
           + cmath.exp(w * (mm + 1)) * d1 / one_minus**2
           + cmath.exp(w * (mm + 2)) * d2_at / one_minus**3)
    bound = abs(d2_at) / abs(one_minus) ** 3
    return cmath.exp(w * b) * est, bound * abs(cmath.exp(w * b))


def _flat_tail(b, k: int, n: int):
    """sum_{j>n} (j+b)^(-k), k >= 2, by Euler-Maclaurin at x = n + 1 + b."""
    x = n + 1 + b
    est = x ** (1 - k) / (k - 1) + 0.5 * x ** (-k) + k * x ** (-k - 1) / 12.0
    bound = abs(k * (k + 1) * (k + 2) * x ** (-k - 3) / 720.0)
    return est, bound


def fourier_series(trig: str, order: int, m, b, n_terms: int = 10**6) -> OracleSum:
    """sum_{j>=1} trig(2 pi (j+b)/m) / (j+b)^order for real m, real b.

    ``n_terms`` terms are summed directly; the remainder is estimated by
    summation by parts (or Euler-Maclaurin when the phase step is a whole
    turn) and its error bound is reported.
    """
    if trig not in ("cos", "sin"):
        raise ValueError("trig must be 'cos' or 'sin'")
    m, b = complex(m), complex(b)
    _check_offset_poles(b)
    w = 2j * math.pi / m
    real_params = m.imag == 0 and b.imag == 0
    turns = 1.0 / m
    whole_turn = abs(turns - round(turns.real)) < 1e-12

    def one_side(sign):
        ws = sign * w
        head = kernels.phase_power_sum(ws, 1.0, b, order, 1, n_terms)
        if whole_turn:
            if order < 2:
                raise DomainError("series diverges: phase step is a whole turn and order < 2")
            t, bound = _flat_tail(b, order, n_terms)
            t *= cmath.exp(ws * b)
            bound *= abs(cmath.exp(ws * b))
        else:
            t, bound = _phase_tail(ws, b, order, n_terms)
        return head + t, bound

    plus, bp = one_side(1)
    if real_params:
        minus, bm = plus.conjugate(), bp
    else:
        minus, bm = one_side(-1)
    if trig == "cos":
        value = 0.5 * (plus + minus)
    else:
        value = (plus - minus) / 2j
    if real_params:
        value = complex(value.real, 0.0)
    kind = TailKind.INTEGRAL_COMPARISON if whole_turn else TailKind.SUMMATION_BY_PARTS
    return OracleSum(value, n_terms, TailBound(kind, 0.5 * (bp + bm)))
