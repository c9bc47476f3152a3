"""Adaptive Gauss-Kronrod integration on [0, 1] and the cot/coth kernels.

Every integral in the package lives on [0, 1] and, once its endpoint
singularities have been cancelled analytically, is smooth.  A nested 7/15
Gauss-Kronrod pair per panel with bisection of the panels that miss their
share of the tolerance is enough.  Integrands are vectorized: they receive a
numpy array of nodes and return an array of (complex) values, and all panels
of one refinement pass are evaluated in a single call.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import BudgetExhausted, NonFinite, PoleHit

# Kronrod abscissae on [-1, 1] (positive half, descending) and weights; every
# odd-indexed node is a 7-point Gauss node.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XK[:-1], _XK[::-1]])  # 15 nodes, ascending
KRONROD_W = np.concatenate([_WK[:-1], _WK[::-1]])
GAUSS_W = np.zeros(15)
GAUSS_W[1:7:2] = _WG[:3]
GAUSS_W[7] = _WG[3]
GAUSS_W[9:14:2] = _WG[2::-1]

ENDPOINT_EPS = 1e-12
POLE_EPS = 1e-12
LAURENT_RADIUS = 1e-4
_EPS = np.finfo(float).eps


def _default_max_evals() -> int:
    env = os.environ.get("LERCH_KERNEL_MAX_EVALS")
    return int(env) if env else 10**6


@dataclass(frozen=True)
class QuadOptions:
    """Tolerances and budget shared by every integral of one evaluation."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_evals: int = field(default_factory=_default_max_evals)

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_evals < 15:
            raise ValueError("max_evals must be at least 15")


@dataclass(frozen=True)
class Integrand:
    """A vectorized function on (0, 1) with optional endpoint limits.

    ``endpoint_limits`` are the analytic values of the (singularity-cancelled)
    integrand at 0+ and 1-; when present, the evaluator itself is never
    called at nodes closer than ``ENDPOINT_EPS`` to either end.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    endpoint_limits: Optional[tuple[complex, complex]] = None

    def __call__(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        lo = u < ENDPOINT_EPS
        hi = u > 1.0 - ENDPOINT_EPS
        if not (lo.any() or hi.any()):
            return np.asarray(self.evaluator(u), dtype=complex)
        out = np.empty(u.shape, dtype=complex)
        inner = ~(lo | hi)
        if inner.any():
            out[inner] = self.evaluator(u[inner])
        if self.endpoint_limits is not None:
            out[lo] = self.endpoint_limits[0]
            out[hi] = self.endpoint_limits[1]
        else:
            if lo.any():
                out[lo] = self.evaluator(np.full(lo.sum(), ENDPOINT_EPS))
            if hi.any():
                out[hi] = self.evaluator(np.full(hi.sum(), 1.0 - ENDPOINT_EPS))
        return out


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    evaluations: int


def oscillation_panels(n, m) -> int:
    """Initial panel count that resolves cos/sin(2 pi n u / m) on [0, 1]."""
    m = abs(complex(m))
    return max(8, 4 * math.ceil(abs(n) / m)) if m else 8


def _gk15(f, a: np.ndarray, b: np.ndarray):
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    u = center[:, None] + half[:, None] * NODES[None, :]
    vals = np.asarray(f(u.ravel()), dtype=complex).reshape(u.shape)
    if not np.all(np.isfinite(vals)):
        bad = u[~np.isfinite(vals)]
        raise NonFinite(f"integrand is not finite at u = {bad[0]!r}")
    kron = (vals @ KRONROD_W) * half
    gauss = (vals @ GAUSS_W) * half
    l1 = (np.abs(vals) @ KRONROD_W) * np.abs(half)
    return kron, np.abs(kron - gauss), l1


def _fsum_c(z: np.ndarray) -> complex:
    return complex(math.fsum(z.real), math.fsum(z.imag))


def integrate(f, rel_tol: float = 1e-10, abs_tol: float = 1e-12,
              max_evals: Optional[int] = None, min_panels: int = 8) -> QuadratureResult:
    """Integrate ``f`` over [0, 1].

    Panels whose |K15 - G7| exceeds their width's share of the target
    max(abs_tol, rel_tol*|I|) are bisected until the summed estimate meets
    the target.  A roundoff floor of 50*eps*integral(|f|) keeps the target
    reachable for integrands that cancel to nearly zero.  Panel
    contributions are combined with compensated summation.
    """
    if not (rel_tol > 0 and abs_tol > 0):
        raise ValueError("tolerances must be positive")
    if max_evals is None:
        max_evals = _default_max_evals()
    if max_evals < 15:
        raise ValueError("max_evals must be at least 15")
    min_panels = max(1, int(min_panels))
    if 15 * min_panels > max_evals:
        min_panels = max_evals // 15

    edges = np.linspace(0.0, 1.0, min_panels + 1)
    a, b = edges[:-1], edges[1:]
    done_val: list[np.ndarray] = []
    done_err: list[np.ndarray] = []
    done_l1: list[np.ndarray] = []
    evals = 0
    while True:
        kron, err, l1 = _gk15(f, a, b)
        evals += 15 * a.size
        value = _fsum_c(np.concatenate(done_val + [kron]))
        total_err = math.fsum(np.concatenate(done_err + [err]))
        total_l1 = math.fsum(np.concatenate(done_l1 + [l1]))
        target = max(abs_tol, rel_tol * abs(value), 50 * _EPS * total_l1)
        if total_err <= target:
            return QuadratureResult(value, total_err, evals)
        # per-panel share of the target, proportional to width
        split = err > target * (b - a)
        if not split.any():
            split = err >= err.max()
        if evals + 30 * int(split.sum()) > max_evals:
            raise BudgetExhausted(
                f"error estimate {total_err:.3g} above target {target:.3g} after {evals} evaluations",
                QuadratureResult(value, total_err, evals),
            )
        keep = ~split
        done_val.append(kron[keep])
        done_err.append(err[keep])
        done_l1.append(l1[keep])
        mid = 0.5 * (a[split] + b[split])
        a, b = np.concatenate([a[split], mid]), np.concatenate([mid, b[split]])


def integrate_opts(f, opts: Optional[QuadOptions] = None, min_panels: int = 8) -> QuadratureResult:
    opts = opts or QuadOptions()
    return integrate(f, opts.rel_tol, opts.abs_tol, opts.max_evals, min_panels)


def integrate_scaled(f, weight, rest, opts: Optional[QuadOptions] = None,
                     min_panels: int = 8) -> QuadratureResult:
    """Integrate ``f`` for use in ``rest + weight * integral``.

    The closed forms often cancel down to a value far smaller than their
    integral term, so after a first pass the integral is redone, if needed,
    with an absolute target of rel_tol * |rest + weight*I| / |weight|, floored
    at the roundoff level of max(|rest|, |weight*I|).
    """
    opts = opts or QuadOptions()
    res = integrate(f, opts.rel_tol, opts.abs_tol, opts.max_evals, min_panels)
    w = abs(complex(weight))
    if w == 0:
        return res
    term = complex(weight) * res.value
    # no point resolving the integral below the roundoff already in the other terms
    floor = 4 * _EPS * max(abs(complex(rest)), abs(term))
    need = max(opts.rel_tol * abs(complex(rest) + term), floor) / w
    if res.abs_error_estimate <= need:
        return res
    # the first pass already meets the caller's tolerance; refinement is best effort
    budget = min(opts.max_evals - res.evaluations, max(10 * res.evaluations, 20000))
    if budget < 15:
        return res
    try:
        fine = integrate(f, 1e-16, max(0.5 * need, 1e-300), budget, min_panels)
    except BudgetExhausted as exc:
        fine = exc.partial
        if fine is None or fine.abs_error_estimate > res.abs_error_estimate:
            return QuadratureResult(res.value, res.abs_error_estimate, res.evaluations + budget)
    return QuadratureResult(fine.value, fine.abs_error_estimate, res.evaluations + fine.evaluations)


# -- kernels --------------------------------------------------------------------------


def cot_pi(x):
    """cot(pi x) for real or complex x (array or scalar).

    The argument is reduced by the nearest integer first, so accuracy near
    the poles at integers is governed by the distance to the pole, and the
    Laurent series is used within 1e-4 of a pole.
    """
    x = np.asarray(x)
    r = x - np.round(x.real)
    if np.any(np.abs(r) < POLE_EPS):
        raise PoleHit("cot(pi x) evaluated at a pole")
    z = np.pi * r
    small = np.abs(z) < LAURENT_RADIUS
    with np.errstate(all="ignore"):
        out = 1.0 / np.tan(z)
        if np.any(small):
            zs = z[small] if z.ndim else z
            z2 = zs * zs
            lau = 1.0 / zs - zs / 3.0 - zs * z2 / 45.0 - 2.0 * zs * z2 * z2 / 945.0
            if z.ndim:
                out = np.where(small, 0, out).astype(np.result_type(out, lau))
                out[small] = lau
            else:
                out = lau
    return out


def coth(z):
    """coth(z) with the Laurent series near 0; poles at i*pi*k (k != 0) raise."""
    z = np.asarray(z)
    red = z.imag / np.pi
    near = np.abs(z.real) + np.pi * np.abs(red - np.round(red))
    if np.any((near < POLE_EPS) & (np.round(red) != 0)):
        raise PoleHit("coth evaluated at a pole")
    if np.any(np.abs(z) < POLE_EPS):
        raise PoleHit("coth evaluated at 0")
    small = np.abs(z) < LAURENT_RADIUS
    with np.errstate(all="ignore"):
        out = 1.0 / np.tanh(z)
        if np.any(small):
            zs = z[small] if z.ndim else z
            z2 = zs * zs
            lau = 1.0 / zs + zs / 3.0 - zs * z2 / 45.0 + 2.0 * zs * z2 * z2 / 945.0
            if z.ndim:
                out = np.where(small, 0, out).astype(np.result_type(out, lau))
                out[small] = lau
            else:
                out = lau
    return out


def cot_kernel(u, m):
    """cot(pi u / m)."""
    return cot_pi(np.asarray(u) / m)


def coth_kernel(u, m):
    """coth(m u / 2)."""
    return coth(np.asarray(u) * m / 2.0)


# -- oscillatory limit integrals ---------------------------------------------------------


def _limit_integral(f, n, m, opts: Optional[QuadOptions]) -> complex:
    panels = oscillation_panels(n, min(abs(complex(m)), 1.0))
    return integrate_opts(Integrand(f), opts, min_panels=panels).value


def sine_limit_integral(k, m, n: int, opts: Optional[QuadOptions] = None) -> complex:
    """int_0^1 (1-u)^k sin(2 pi n u / m) cot(pi u / m) du; tends to |m|/2 for real |m| >= 1."""
    return _limit_integral(lambda u: (1 - u) ** k * np.sin(2 * np.pi * n * u / m) * cot_pi(u / m), n, m, opts)


def cosine_limit_integral(k, m, n: int, opts: Optional[QuadOptions] = None) -> complex:
    """int_0^1 (1-u)^k cos(2 pi n u/m) cot(pi u/m) - m (1-u) cos(2 pi n u) cot(pi u) du.

    Tends to m log|m| / pi for real |m| >= 1, except k = 0 with |m| = 1.
    """
    def f(u):
        return (1 - u) ** k * np.cos(2 * np.pi * n * u / m) * cot_pi(u / m) - m * (1 - u) * np.cos(2 * np.pi * n * u) * cot_pi(u)

    return _limit_integral(f, n, m, opts)


def half_cosine_limit_integral(k, m, n: int, opts: Optional[QuadOptions] = None) -> complex:
    """int_0^1 (1-u)^k cos(2 pi n u/m) cot(pi u/m) - (m/2)(1-u) cos(pi n u) cot(pi u/2) du.

    Tends to (m / pi) log(|m| / 2).
    """
    def f(u):
        return (1 - u) ** k * np.cos(2 * np.pi * n * u / m) * cot_pi(u / m) - m / 2 * (1 - u) * np.cos(np.pi * n * u) * cot_pi(u / 2)

    return _limit_integral(f, n, m, opts)
