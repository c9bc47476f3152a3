"""Identity checks: closed forms against oracles over parameter grids.

Every check produces a :class:`CheckReport`.  Suites are plain functions
returning lists of reports in a fixed order, so a run is reproducible for a
given :class:`RunConfig` (random grids are drawn from ``seed``).
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

import numpy as np

from . import harmonic, hurwitz, lerch, oracle, partial_sums, quadrature, series_limits
from .errors import DivergentSeries, FormulaBreakdown, LerchError
from .partial_sums import SumParams, TrigKind
from .quadrature import QuadOptions

GRIDS = ("small", "full")


@dataclass(frozen=True)
class RunConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_evals: int = field(default_factory=quadrature._default_max_evals)
    output_format: str = "json"
    seed: int = 7
    grid: str = "full"

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output_format must be 'json' or 'csv'")
        if self.grid not in GRIDS:
            raise ValueError(f"grid must be one of {GRIDS}")

    @property
    def quad(self) -> QuadOptions:
        return QuadOptions(self.rel_tol, self.abs_tol, self.max_evals)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


@dataclass
class CheckReport:
    identity_id: str
    params: dict
    formula_value: Optional[complex]
    oracle_value: Optional[complex]
    abs_err: float
    rel_err: float
    passed: bool
    tol: float = 0.0
    abs_floor: float = 0.0
    skipped_reason: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "identity_id": self.identity_id,
            "params": _jsonable(self.params),
            "formula_value": _cplx(self.formula_value),
            "oracle_value": _cplx(self.oracle_value),
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "pass": self.passed,
            "tol": self.tol,
            "abs_floor": self.abs_floor,
        }
        if self.skipped_reason is not None:
            d["skipped_reason"] = self.skipped_reason
        return d


def _cplx(z) -> Optional[dict]:
    if z is None:
        return None
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _jsonable(obj: Any):
    if isinstance(obj, complex):
        return _cplx(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "value") and isinstance(obj.value, str):  # enums
        return obj.value
    return obj


def compare(identity: str, params: dict, formula, reference, tol: float, abs_floor: float = 0.0) -> CheckReport:
    """pass iff rel_err <= tol or abs_err <= abs_floor."""
    f, r = complex(formula), complex(reference)
    abs_err = abs(f - r)
    rel_err = abs_err / abs(r) if r != 0 else (0.0 if abs_err == 0 else math.inf)
    ok = bool(rel_err <= tol or abs_err <= abs_floor)
    return CheckReport(identity, params, f, r, abs_err, rel_err, ok, tol, abs_floor)


def skipped(identity: str, params: dict, reason: str) -> CheckReport:
    return CheckReport(identity, params, None, None, 0.0, 0.0, True, skipped_reason=reason)


def failed(identity: str, params: dict, exc: Exception) -> CheckReport:
    return CheckReport(identity, params, None, None, math.inf, math.inf, False,
                       skipped_reason=f"error: {type(exc).__name__}: {exc}")


def guarded(identity: str, params: dict, run: Callable[[], CheckReport]) -> CheckReport:
    try:
        return run()
    except LerchError as exc:
        return failed(identity, params, exc)


# -- oracle ------------------------------------------------------------------------------


def suite_oracle(cfg: RunConfig) -> list[CheckReport]:
    out = []
    rng = np.random.default_rng([cfg.seed, 1])
    count = 100 if cfg.grid == "full" else 20
    for _ in range(count):
        z = complex(rng.uniform(0.05, 10), rng.uniform(-5, 5))
        p = {"z": z}
        out.append(compare("oracle-digamma-recurrence", p, oracle.digamma(z + 1) - oracle.digamma(z), 1 / z, 1e-12, 1e-12))
    for s in (2, 3, 5, 8):
        for q in (0.3, 1.0, 2.5, 0.5 + 0.5j):
            p = {"s": s, "q": complex(q)}
            diff = oracle.hurwitz_zeta_int(s, q) - oracle.hurwitz_zeta_int(s, q + 1)
            out.append(compare("oracle-hurwitz-shift", p, diff, complex(q) ** (-s), 1e-13, 1e-13))
    out.append(compare("oracle-zeta-2", {"s": 2}, oracle.zeta_int(2), math.pi**2 / 6, 1e-13))
    out.append(compare("oracle-zeta-4", {"s": 4}, oracle.zeta_int(4), math.pi**4 / 90, 1e-13))
    out.append(compare("oracle-digamma-half", {"z": 0.5}, oracle.digamma(0.5),
                       -oracle.euler_gamma() - 2 * math.log(2), 1e-12, 1e-12))
    geo = oracle.sum_series(lambda j: math.exp(-j), oracle.Geometric(math.exp(-1)))
    out.append(compare("oracle-sum-geometric", {}, geo.value, 1 / (math.e - 1), 1e-14))
    return out


# -- quadrature ------------------------------------------------------------------------


LIMIT_K = (0, 1, 2)
LIMIT_M = (1.5, 2.0, 4.0, -2.0)


def limit_checks(cfg: RunConfig, ns=(10, 100, 1000)) -> list[CheckReport]:
    """The three oscillatory limits; tolerance 10/n relative (1% at n = 1000)."""
    out = []
    q = cfg.quad
    for k in LIMIT_K:
        for m in LIMIT_M:
            for n in ns:
                p = {"k": k, "m": m, "n": n}
                tol, floor = 10.0 / n, abs(m) / n
                out.append(guarded("limit-sine", p, lambda: compare(
                    "limit-sine", p, quadrature.sine_limit_integral(k, m, n, q), abs(m / 2), tol, floor)))
                out.append(guarded("limit-cosine", p, lambda: compare(
                    "limit-cosine", p, quadrature.cosine_limit_integral(k, m, n, q),
                    m * math.log(abs(m)) / math.pi, tol, floor)))
                out.append(guarded("limit-half-cosine", p, lambda: compare(
                    "limit-half-cosine", p, quadrature.half_cosine_limit_integral(k, m, n, q),
                    m / math.pi * math.log(abs(m) / 2), tol, floor)))
    return out


def suite_quadrature(cfg: RunConfig) -> list[CheckReport]:
    q = cfg.quad
    out = [
        compare("quad-sin-cot", {}, quadrature.integrate_opts(
            lambda u: np.sin(2 * np.pi * u) * quadrature.cot_pi(u), q).value, 1.0, 1e-12),
        compare("quad-cos-cot-zero", {"n": 3}, quadrature.integrate_opts(
            lambda u: (1 - np.cos(6 * np.pi * u)) * quadrature.cot_pi(u), q).value, 0.0, 0.0, 1e-12),
    ]
    ns = (10, 100, 1000) if cfg.grid == "full" else (10, 100)
    return out + limit_checks(cfg, ns)


# -- harmonic --------------------------------------------------------------------------


def hp_grid(seed: int, count_generic: int = 30) -> list:
    """Offsets b for the asymptotic-constant check: generic, half-integer, integer."""
    rng = np.random.default_rng([seed, 2])
    generic = []
    while len(generic) < count_generic:
        b = float(rng.uniform(-3.0, 3.0))
        if abs(math.sin(2 * math.pi * b)) > 1e-2:
            generic.append(b)
    half = [x + 0.5 for x in range(-3, 7)]
    ints = list(range(10))
    return generic + half + ints


def suite_harmonic(cfg: RunConfig) -> list[CheckReport]:
    out = []
    q = cfg.quad
    bs = hp_grid(cfg.seed, 30 if cfg.grid == "full" else 8)
    for b in bs:
        p = {"b": b}
        ref = -oracle.euler_gamma() - oracle.digamma(b + 1)
        out.append(guarded("hp-constant", p, lambda: compare(
            "hp-constant", p, harmonic.hp_asymptotic_constant(b, q).value, ref, 1e-8, 1e-10)))
    # zeta power series for |b| < 1, K = 60
    K = 60
    for b in (0.1, -0.3, 0.5, 0.65, -0.75):
        series = -math.fsum((-1) ** j * oracle.zeta_int(j) * b ** (j - 1) for j in range(2, K + 1))
        bound = abs(b) ** K / (1 - abs(b))
        p = {"b": b, "terms": K}
        out.append(compare("hp-constant-zeta-series", p, harmonic.hp_asymptotic_constant(b, q).value,
                           series, 0.0, bound + 1e-12))
    for b, n, tol in ((0.3, 10**4, 1e-3), (-0.3, 10**4, 1e-3), (1.7, 10**4, 1e-3), (0.3, 10**6, 1e-5)):
        p = {"b": b, "n": n}
        gap = harmonic.harmonic_progression(1, 1.0, b, n) - harmonic.harmonic_number(1, n)
        out.append(compare("hp-asymptotic", p, harmonic.hp_asymptotic_constant(b, q).value, gap, 0.0, tol))
    for x in (0.1, 0.25, -0.25, 0.4):
        p = {"x": x}
        ref = math.fsum(oracle.zeta_int(2 * j + 1) * x ** (2 * j + 1) for j in range(1, 80))
        out.append(compare("zeta-odd-generating", p, harmonic.zeta_odd_generating(x, q), ref, 1e-10, 1e-14))
    return out


# -- partial sums ----------------------------------------------------------------------


def partial_sum_tuples(seed: int, count: int = 100) -> list[dict]:
    """Random complex parameters for the finite-sum identities.

    |m| in [1, 6]; Im(a/m) is kept small enough that cos/sin(2 pi (a n + b)/m)
    stays below e^20; Re(m) (n + Re b) <= 600 for the exponential form so
    e^{m (n + b)} stays finite.
    """
    rng = np.random.default_rng([seed, 3])
    out = []
    for _ in range(count):
        n = int(rng.choice([1, 2, 17, 200]))
        m = cmath.rect(rng.uniform(1, 6), rng.uniform(-math.pi, math.pi))
        s = rng.uniform(-1, 1) * min(0.3, 3.0 / (2 * math.pi * n))
        a = m * complex(rng.uniform(0.2, 1.5), s)
        b = complex(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5))
        k = int(rng.integers(0, 7))
        while True:
            me = cmath.rect(rng.uniform(1, 6), rng.uniform(-math.pi, math.pi))
            if me.real * (n + b.real) <= 600:
                break
        out.append({"a": a, "b": b, "m": m, "k": k, "n": n, "m_exp": me, "k_exp": max(k, 1)})
    return out


def suite_partial_sums(cfg: RunConfig) -> list[CheckReport]:
    out = []
    q = cfg.quad
    for t in partial_sum_tuples(cfg.seed, 100 if cfg.grid == "full" else 20):
        for kind in TrigKind:
            k = max(t["k"], kind.min_k)
            p = {"kind": kind.value, "a": t["a"], "b": t["b"], "m": t["m"], "k": k, "n": t["n"]}

            def run(kind=kind, p=p):
                sp = SumParams(p["a"], p["b"], p["m"], p["k"], p["n"])
                return compare("partial-" + kind.value, p, partial_sums.trig_partial_closed(kind, sp, q),
                               partial_sums.trig_partial_direct(kind, sp), 1e-8)
            out.append(guarded("partial-" + kind.value, p, run))
        p = {"b": t["b"], "m": t["m_exp"], "k": t["k_exp"], "n": t["n"]}

        def run_exp(p=p):
            sp = SumParams(1.0, p["b"], p["m"], p["k"], p["n"])
            return compare("partial-exp", p, partial_sums.lerch_partial_closed(sp, q),
                           partial_sums.lerch_partial_direct(sp), 1e-8)
        out.append(guarded("partial-exp", p, run_exp))
    # b -> 0 continuity
    for kind in TrigKind:
        k = max(1, kind.min_k)
        p = {"kind": kind.value, "a": 1.0, "m": 3.0, "k": k, "n": 10}
        at0 = partial_sums.trig_partial_closed(kind, SumParams(1.0, 0.0, 3.0, k, 10), q)
        near = partial_sums.trig_partial_closed(kind, SumParams(1.0, 1e-6, 3.0, k, 10), q)
        out.append(compare("partial-b0-continuity", p, near, at0, 1e-4))
    return out


# -- full series -----------------------------------------------------------------------


SERIES_M = (1.0, 1.5, 2.0, 3.0, 8.0, -2.0)
SERIES_B = (0.0, 1 / 3, 0.5, 1.0, 1.25)


def series_checks(cfg: RunConfig, ms=SERIES_M, bs=SERIES_B, orders=(1, 2, 3, 4)) -> list[CheckReport]:
    out = []
    q = cfg.quad
    for m in ms:
        for b in bs:
            for order in orders:
                for trig in ("cos", "sin"):
                    p = {"trig": trig, "order": order, "m": m, "b": b}
                    ident = f"series-{trig}-{order % 2 and 'odd' or 'even'}"
                    spec = series_limits.SeriesSpec(trig, order, m, b)
                    try:
                        value = series_limits.fourier_series_b(spec, q)
                    except (DivergentSeries, FormulaBreakdown) as exc:
                        out.append(skipped(ident, p, f"{type(exc).__name__}: {exc}"))
                        continue
                    except LerchError as exc:
                        out.append(failed(ident, p, exc))
                        continue
                    ref = oracle.fourier_series(trig, order, m, b)
                    p = dict(p, regime=value.regime.regime.value, tail_bound=ref.tail.bound)
                    out.append(compare(ident, p, value.value, ref.value, 0.0, 1e-6))
                    if b == 0:
                        b0 = series_limits.fourier_series_b0(spec, q)
                        out.append(compare("series-b0-reduction", p, value.value, b0.value, 1e-10, 1e-10))
    return out


def series_regime_checks(cfg: RunConfig) -> list[CheckReport]:
    """Generic-b values at 1/2 -+ 1e-4 straddle the half-integer value."""
    out = []
    q = cfg.quad
    for trig, order in (("cos", 1), ("cos", 3), ("sin", 2), ("sin", 4)):
        for m in (1.5, 3.0, -2.0):
            vals = [series_limits.fourier_series_b(series_limits.SeriesSpec(trig, order, m, b), q).value
                    for b in (0.5 - 1e-4, 0.5, 0.5 + 1e-4)]
            lo, mid, hi = vals
            slope = abs(hi - lo)
            p = {"trig": trig, "order": order, "m": m}
            out.append(compare("series-regime-continuity", p, mid, (lo + hi) / 2, 0.0, 1e-2 * slope + 1e-12))
    return out


def suite_series_limits(cfg: RunConfig) -> list[CheckReport]:
    if cfg.grid == "full":
        out = series_checks(cfg)
    else:
        out = series_checks(cfg, ms=(1.0, 2.0, -2.0), bs=(0.0, 1 / 3, 0.5, 1.0), orders=(1, 2, 3))
    return out + series_regime_checks(cfg)


# -- lerch -----------------------------------------------------------------------------


LERCH_M = (-0.5, -1.0, -3.0, -0.5 + 1j, -1 + 3j)
LERCH_B = (1 / 3, 0.5, 1.0, 1.75)


def lerch_checks(cfg: RunConfig, ms=LERCH_M, ks=range(1, 6), bs=LERCH_B) -> list[CheckReport]:
    out = []
    q = cfg.quad
    for m in ms:
        for k in ks:
            p = {"m": complex(m), "k": k}
            out.append(guarded("polylog-series", p, lambda: compare(
                "polylog-series", p, lerch.polylog(k, m, q).value, oracle.polylog_series(k, m).value, 1e-7)))
            out.append(guarded("lerch-b0-polylog", p, lambda: compare(
                "lerch-b0-polylog", p, lerch.lerch_e_sum(lerch.LerchParams(m, k, 0.0), q).value,
                lerch.polylog(k, m, q).value, 1e-8)))
            for b in bs:
                pb = dict(p, b=b)
                lp = lerch.LerchParams(m, k, b)
                ident = "lerch-e-" + lp.regime.regime.value
                out.append(guarded(ident, pb, lambda: compare(
                    ident, pb, lerch.lerch_e_sum(lp, q).value, oracle.exp_series(m, k, b).value, 1e-7)))
                out.append(guarded("lerch-phi", pb, lambda: compare(
                    "lerch-phi", pb, lerch.lerch_phi(lp, q).value, oracle.lerch_phi_series(m, k, b).value, 1e-7)))
    return out


def generic_b0_limit(m, k: int, q: Optional[QuadOptions] = None, h: float = 1e-4) -> complex:
    """Third-order extrapolation of the generic-b closed form to b = 0."""
    def E(b):
        return lerch.lerch_e_sum(lerch.LerchParams(m, k, b), q).value
    return (8 * E(h) - 6 * E(2 * h) + E(4 * h)) / 3


def suite_lerch(cfg: RunConfig) -> list[CheckReport]:
    q = cfg.quad
    if cfg.grid == "full":
        out = lerch_checks(cfg)
    else:
        out = lerch_checks(cfg, ms=(-1.0, -0.5 + 1j), ks=range(1, 4))
    for k in (2, 3, 4):
        p = {"k": k, "m": -1e-6}
        out.append(compare("polylog-zeta-limit", p, lerch.polylog(k, -1e-6, q).value, oracle.zeta_int(k), 0.0, 1e-4))
    for m, ref in ((1.0, math.e), (-1.0, 1 / math.e)):
        p = {"m": m, "k": 30}
        out.append(compare("exp-via-zeta", p, lerch.exp_via_zeta(m, 30), ref, 0.0, 1e-6))
    for k in (2, 3, 4):
        h = 1e-5
        p = {"k": k, "m": -1.0, "step": h}
        d = (lerch.polylog(k, -1 + h, q).value - lerch.polylog(k, -1 - h, q).value) / (2 * h)
        out.append(compare("polylog-derivative", p, d, lerch.polylog(k - 1, -1.0, q).value, 0.0, 1e-6))
    for m in (-1.0, -0.5 + 1j, -3.0):
        for k in (1, 2, 3):
            p = {"m": complex(m), "k": k}
            out.append(guarded("lerch-generic-b0-limit", p, lambda: compare(
                "lerch-generic-b0-limit", p, generic_b0_limit(m, k, q), lerch.polylog(k, m, q).value, 1e-8)))
    for m in (-1.0, -0.5 + 1j):
        for k in (1, 3):
            vals = [lerch.lerch_e_sum(lerch.LerchParams(m, k, b), q).value for b in (0.5 - 1e-4, 0.5, 0.5 + 1e-4)]
            lo, mid, hi = vals
            p = {"m": complex(m), "k": k}
            out.append(compare("lerch-regime-continuity", p, mid, (lo + hi) / 2, 0.0, 1e-2 * abs(hi - lo) + 1e-12))
    for m in (4 + 7j, 2j * math.pi):
        p = {"m": complex(m), "k": 2}
        try:
            lerch.polylog(2, m, q)
            out.append(CheckReport("lerch-excluded-region", p, None, None, math.inf, math.inf, False,
                                   skipped_reason="excluded region was not rejected"))
        except LerchError as exc:
            out.append(skipped("lerch-excluded-region", p, f"{type(exc).__name__}: {exc}"))
    return out


# -- hurwitz ---------------------------------------------------------------------------


def suite_hurwitz(cfg: RunConfig) -> list[CheckReport]:
    out = []
    rng = np.random.default_rng([cfg.seed, 4])
    count = 50 if cfg.grid == "full" else 10
    bs = []
    while len(bs) < count:
        b = float(rng.uniform(-2, 2))
        if b != 0:
            bs.append(b)
    for k in range(11):
        for b in bs:
            p = {"k": k, "b": b}
            ref = hurwitz.hurwitz_zeta_neg_bernoulli(k, b)
            scale = max(1.0, abs(ref) * (k + 1))
            out.append(compare("hurwitz-bernoulli", p, hurwitz.hurwitz_zeta_neg(k, b), ref, 0.0, 1e-12 * scale))
    for k in range(7):
        for b in (Fraction(1, 2), Fraction(1, 3), Fraction(2)):
            p = {"k": k, "b": b}
            exact = hurwitz.hurwitz_zeta_neg_exact(k, b)
            ref = hurwitz.hurwitz_zeta_neg_bernoulli(k, b)
            rel = 0.0 if exact == ref else math.inf
            out.append(CheckReport("hurwitz-exact", p, complex(exact), complex(ref), float(abs(exact - ref)),
                                   rel, exact == ref, 0.0, 0.0))
    for k in (2, 3, 4):
        for b in (0.25, 1 / 3, 0.5, 2 / 3):
            p = {"k": k, "b": b}

            def run(k=k, b=b, p=p):
                res = hurwitz.hurwitz_polylog_relation_residual(k, b)
                return CheckReport("hurwitz-polylog-relation", p, res, 0.0, res, math.inf if res else 0.0,
                                   res <= 1e-6, 0.0, 1e-6)
            out.append(guarded("hurwitz-polylog-relation", p, run))
    return out


SUITES: dict[str, Callable[[RunConfig], list[CheckReport]]] = {
    "oracle": suite_oracle,
    "quadrature": suite_quadrature,
    "harmonic": suite_harmonic,
    "partial_sums": suite_partial_sums,
    "series_limits": suite_series_limits,
    "lerch": suite_lerch,
    "hurwitz": suite_hurwitz,
}


def run(suite: str, cfg: Optional[RunConfig] = None) -> list[CheckReport]:
    cfg = cfg or RunConfig()
    if suite == "all":
        return [r for name in SUITES for r in SUITES[name](cfg)]
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[suite](cfg)


def summary(reports: list[CheckReport]) -> str:
    passed = sum(r.passed for r in reports)
    return f"{passed}/{len(reports)}"


CSV_FIELDS = ["identity_id", "params", "formula_re", "formula_im", "oracle_re", "oracle_im",
              "abs_err", "rel_err", "pass", "tol", "abs_floor", "skipped_reason"]


def csv_row(r: CheckReport) -> dict:
    f = complex(r.formula_value) if r.formula_value is not None else None
    o = complex(r.oracle_value) if r.oracle_value is not None else None
    return {
        "identity_id": r.identity_id,
        "params": json.dumps(_jsonable(r.params), sort_keys=True),
        "formula_re": "" if f is None else repr(f.real),
        "formula_im": "" if f is None else repr(f.imag),
        "oracle_re": "" if o is None else repr(o.real),
        "oracle_im": "" if o is None else repr(o.imag),
        "abs_err": repr(r.abs_err),
        "rel_err": repr(r.rel_err),
        "pass": str(r.passed).lower(),
        "tol": repr(r.tol),
        "abs_floor": repr(r.abs_floor),
        "skipped_reason": r.skipped_reason or "",
    }
