"""Taylor remainders of exp, cos and sin, and the 1/b^P-scaled brackets.

Every closed form carries terms like

    (f(t b) - sum_{j<=K} c_j (t b)^{p_j}) / b^P

with f one of exp, cos, sin.  Subtracting the polynomial from f(t b) loses
all significance for small |t b|, and at b = 0 the quotient is a limit.
Both are handled by summing the remainder series directly while it is
dominated by its first term.
"""

from __future__ import annotations

import cmath
import math

from .errors import ZeroB

_MAX_TERMS = 400


def _power(kind: str, j: int) -> int:
    if kind == "exp":
        return j
    if kind == "cos":
        return 2 * j
    if kind == "sin":
        return 2 * j + 1
    raise ValueError(f"unknown Taylor kind {kind!r}")


def coefficient(kind: str, j: int) -> float:
    """Coefficient of x^{p_j} in the Maclaurin series of ``kind``."""
    p = _power(kind, j)
    sign = 1 if kind == "exp" or j % 2 == 0 else -1
    return sign / math.factorial(p)


def _func(kind: str, x: complex) -> complex:
    return {"exp": cmath.exp, "cos": cmath.cos, "sin": cmath.sin}[kind](x)


def _series_regime(kind: str, x: complex, K: int) -> bool:
    # terms beyond index K shrink from the first one on
    lead = _power(kind, max(K + 1, 0))
    return abs(x) < max(2.0, lead + 1.0)


def tail(kind: str, x, K: int) -> complex:
    """f(x) - sum_{j=0..K} c_j x^{p_j}; K < 0 means the whole function."""
    x = complex(x)
    if K < 0:
        return _func(kind, x)
    if _series_regime(kind, x, K):
        return _scaled_series(kind, x, 1.0 + 0j, K, 0)
    fx = _func(kind, x)
    re, im = [fx.real], [fx.imag]
    for j in range(K + 1):
        term = coefficient(kind, j) * x ** _power(kind, j)
        re.append(-term.real)
        im.append(-term.imag)
    return complex(math.fsum(re), math.fsum(im))


def _scaled_series(kind: str, t: complex, b: complex, K: int, P: int) -> complex:
    """sum_{j>K} c_j t^{p_j} b^{p_j - P}, summed until terms are negligible."""
    total = 0j
    j = max(K + 1, 0)
    for _ in range(_MAX_TERMS):
        p = _power(kind, j)
        term = coefficient(kind, j) * t**p * b ** (p - P)
        total += term
        if abs(term) <= 1e-17 * abs(total) or term == 0:
            break
        j += 1
    return total


def leading_power(kind: str, K: int) -> int:
    return _power(kind, max(K + 1, 0))


def bracket(kind: str, t, b, K: int, P: int) -> complex:
    """Return tail(kind, t*b, K) / b^P, including its b -> 0 limit.

    At b = 0 the limit is 0 when the leading remainder power exceeds P and
    the leading coefficient times t^P when it equals P; otherwise the term is
    singular and ZeroB is raised.
    """
    t, b = complex(t), complex(b)
    if b == 0:
        lead = leading_power(kind, K)
        if lead > P:
            return 0j
        if lead == P:
            return coefficient(kind, max(K + 1, 0)) * t**P
        raise ZeroB("bracket term is singular at b = 0")
    x = t * b
    if K >= 0 and _series_regime(kind, x, K):
        return _scaled_series(kind, t, b, K, P)
    return tail(kind, x, K) / b**P
