"""Hurwitz zeta at negative integers and Bernoulli polynomials.

zeta(-k, b) = -B_{k+1}(b) / (k + 1) is evaluated from the finite sum

    b^k / 2 + 2 k! b^{k+1} sum_{j=0..floor((k+1)/2)} (-1)^j (2 pi b)^(-2j) zeta(2j) / (k+1-2j)!

and checked against exact rational Bernoulli polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import oracle
from .errors import DomainError, ZeroB
from .lerch import polylog

MAX_DEGREE = 64


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n (with B_1 = -1/2) from sum_{j<=m} C(m+1, j) B_j = 0."""
    if n > MAX_DEGREE:
        raise DomainError(f"Bernoulli tables stop at degree {MAX_DEGREE}")
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(math.comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return tuple(B)


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of B_n(x) in ascending powers of x."""
    if n < 0:
        raise DomainError("degree must be non-negative")
    B = bernoulli_numbers(n)
    # B_n(x) = sum_j C(n, j) B_j x^(n-j)
    return tuple(math.comb(n, n - i) * B[n - i] for i in range(n + 1))


def bernoulli_poly(n: int, b):
    """B_n(b); exact for Fraction/int arguments, float/complex otherwise."""
    coeffs = bernoulli_poly_coeffs(n)
    if isinstance(b, (Fraction, int)):
        b = Fraction(b)
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * b + c
        return acc
    b = complex(b)
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * b + float(c)
    return acc


def hurwitz_zeta_neg_bernoulli(k: int, b):
    """-B_{k+1}(b) / (k + 1)."""
    return -bernoulli_poly(k + 1, b) / (k + 1)


def hurwitz_zeta_neg(k: int, b) -> complex:
    """zeta(-k, b) for integer k >= 0 from the zeta(2j) sum; b = 0 is rejected."""
    if int(k) != k or k < 0:
        raise DomainError("k must be a non-negative integer")
    k = int(k)
    b = complex(b)
    if b == 0:
        raise ZeroB("the zeta(2j) sum divides by b; use the Bernoulli form at b = 0")
    parts = [b**k / 2]
    for j in range((k + 1) // 2 + 1):
        parts.append(2 * math.factorial(k) * (-1) ** j * b ** (k + 1 - 2 * j) / (2 * math.pi) ** (2 * j)
                     * oracle.zeta_int(2 * j) / math.factorial(k + 1 - 2 * j))
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def zeta_even_exact(j: int) -> Fraction:
    """zeta(2j) / (2 pi)^(2j) as an exact rational, (-1)^(j+1) B_2j / (2 (2j)!)."""
    return (-1) ** (j + 1) * bernoulli_numbers(2 * j)[2 * j] / (2 * math.factorial(2 * j))


def hurwitz_zeta_neg_exact(k: int, b) -> Fraction:
    """The zeta(2j) sum in rational arithmetic for rational b != 0."""
    b = Fraction(b)
    if b == 0:
        raise ZeroB("b must be non-zero")
    total = b**k / 2
    for j in range((k + 1) // 2 + 1):
        total += 2 * math.factorial(k) * (-1) ** j * b ** (k + 1 - 2 * j) * zeta_even_exact(j) / math.factorial(k + 1 - 2 * j)
    return total


def hurwitz_polylog_relation_residual(k: int, b: float) -> float:
    """|LHS - RHS| of (2 pi)^k / (k-1)! zeta(1-k, b) = i^-k Li_k(e^{2 pi i b}) + i^k Li_k(e^{-2 pi i b})."""
    if int(k) != k or k < 2:
        raise DomainError("k must be an integer >= 2")
    k = int(k)
    if not 0 < b < 1:
        raise DomainError("b must lie in the open interval (0, 1)")
    lhs = (2 * math.pi) ** k / math.factorial(k - 1) * hurwitz_zeta_neg(k - 1, b)
    w = 2j * math.pi * b
    rhs = 1j ** (-k) * polylog(k, w).value + 1j**k * polylog(k, -w).value
    return abs(lhs - rhs)
