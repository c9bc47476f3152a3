"""Command-line entry point.

Evaluation subcommands print one JSON record with the value and the residual
against the matching reference oracle.  ``verify`` streams check reports
(JSON lines or CSV) to stdout and a ``passed/total`` summary to stderr.

Exit codes: 0 success, 1 verify failure, 2 domain error, 3 convergence
failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Optional

from . import harmonic, hurwitz, lerch, oracle, partial_sums, series_limits, verify
from .errors import ConvergenceError, DomainError
from .partial_sums import SumParams, TrigKind
from .quadrature import QuadOptions

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN, EXIT_CONVERGENCE, EXIT_USAGE = 0, 1, 2, 3, 64


def parse_number(text: str) -> complex:
    """Parse ``re`` or ``re+imI`` (also ``imI``, ``re-imI``, ``j`` suffix)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise argparse.ArgumentTypeError("empty number")
    try:
        return complex(float(s))
    except ValueError:
        pass
    try:
        return complex(s.replace("I", "j").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r} as re or re+imI") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _add_quad(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rel-tol", type=float, default=None)
    p.add_argument("--abs-tol", type=float, default=None)
    p.add_argument("--max-evals", type=int, default=None)
    p.add_argument("--config", default=None, help="JSON file with RunConfig fields")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lerchphi", description="Closed-form Fourier, Lerch and polylog sums with oracle checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("partial", help="finite Fourier or exponential sum over a j + b, j = 1..n")
    p.add_argument("--kind", required=True, choices=[k.value for k in TrigKind] + ["exp"])
    p.add_argument("-a", type=parse_number, default=1 + 0j)
    p.add_argument("-b", type=parse_number, default=0j)
    p.add_argument("-m", type=parse_number, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _add_quad(p)

    p = sub.add_parser("series", help="full Fourier series C^m_k(b) or S^m_k(b)")
    p.add_argument("--trig", required=True, choices=["cos", "sin"])
    p.add_argument("-k", "--order", dest="order", type=int, required=True)
    p.add_argument("-m", type=parse_number, required=True)
    p.add_argument("-b", type=parse_number, default=0j)
    p.add_argument("--oracle-terms", type=int, default=10**5, help="direct-summation terms for the residual (0 skips it)")
    _add_quad(p)

    p = sub.add_parser("lerch", help="Phi(e^m, k, b), or E^m_k(b) with --e-sum")
    p.add_argument("-m", type=parse_number, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-b", type=parse_number, required=True)
    p.add_argument("--e-sum", action="store_true", help="return sum_{j>=1} e^{m(j+b)}/(j+b)^k instead of Phi")
    _add_quad(p)

    p = sub.add_parser("polylog", help="Li_k(e^m)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=parse_number, required=True)
    _add_quad(p)

    p = sub.add_parser("hurwitz-neg", help="zeta(-k, b)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-b", type=parse_number, required=True)

    p = sub.add_parser("hp-const", help="lim HP_1(n) - H(n) at a = 1")
    p.add_argument("-b", type=parse_number, required=True)
    _add_quad(p)

    p = sub.add_parser("verify", help="run identity checks against the oracles")
    p.add_argument("suite", choices=["all"] + list(verify.SUITES))
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--grid", choices=verify.GRIDS, default=None)
    p.add_argument("--format", dest="output_format", choices=["json", "csv"], default=None)
    _add_quad(p)
    return parser


def load_config(args) -> verify.RunConfig:
    data = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise DomainError("config file must hold a JSON object")
    for key in ("rel_tol", "abs_tol", "max_evals", "seed", "grid", "output_format"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    try:
        return verify.RunConfig.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"bad configuration: {exc}") from None


def _record(command: str, params: dict, value, residual: Optional[float], **extra) -> dict:
    out = {"command": command, "params": verify._jsonable(params),
           "value": verify._cplx(value), "error_estimate": residual}
    out.update(extra)
    return out


def _residual(value, ref) -> float:
    return abs(complex(value) - complex(ref))


def cmd_partial(args, q: QuadOptions) -> dict:
    params = {"kind": args.kind, "a": args.a, "b": args.b, "m": args.m, "k": args.k, "n": args.n}
    sp = SumParams(args.a, args.b, args.m, args.k, args.n)
    if args.kind == "exp":
        value = partial_sums.lerch_partial_closed(sp, q)
        direct = partial_sums.lerch_partial_direct(sp)
    else:
        value = partial_sums.trig_partial_closed(args.kind, sp, q)
        direct = partial_sums.trig_partial_direct(args.kind, sp)
    return _record("partial", params, value, _residual(value, direct), direct=verify._cplx(direct))


def cmd_series(args, q: QuadOptions) -> dict:
    spec = series_limits.SeriesSpec(args.trig, args.order, args.m, args.b)
    params = {"trig": args.trig, "order": args.order, "m": args.m, "b": args.b}
    res = series_limits.fourier_series_b(spec, q)
    residual = None
    if args.oracle_terms > 0 and not spec.best_effort:
        ref = oracle.fourier_series(args.trig, args.order, args.m.real, args.b, n_terms=args.oracle_terms)
        residual = _residual(res.value, ref.value) + ref.tail.bound
    return _record("series", params, res.value, residual, regime=res.regime.regime.value, best_effort=res.best_effort)


def cmd_lerch(args, q: QuadOptions) -> dict:
    p = lerch.LerchParams(args.m, args.k, args.b)
    params = {"m": args.m, "k": args.k, "b": args.b, "e_sum": args.e_sum}
    res = lerch.lerch_e_sum(p, q) if args.e_sum else lerch.lerch_phi(p, q)
    residual = None
    if args.m.real < 0:
        ref = oracle.exp_series(args.m, args.k, args.b) if args.e_sum else oracle.lerch_phi_series(args.m, args.k, args.b)
        residual = _residual(res.value, ref.value) + ref.tail.bound
    return _record("lerch", params, res.value, residual, regime=p.regime.regime.value,
                   is_continuation=res.is_continuation)


def cmd_polylog(args, q: QuadOptions) -> dict:
    res = lerch.polylog(args.k, args.m, q)
    residual = None
    if args.m.real < 0:
        ref = oracle.polylog_series(args.k, args.m)
        residual = _residual(res.value, ref.value) + ref.tail.bound
    return _record("polylog", {"k": args.k, "m": args.m}, res.value, residual, is_continuation=res.is_continuation)


def cmd_hurwitz_neg(args, q: QuadOptions) -> dict:
    value = hurwitz.hurwitz_zeta_neg(args.k, args.b)
    ref = hurwitz.hurwitz_zeta_neg_bernoulli(args.k, args.b)
    return _record("hurwitz-neg", {"k": args.k, "b": args.b}, value, _residual(value, ref))


def cmd_hp_const(args, q: QuadOptions) -> dict:
    c = harmonic.hp_asymptotic_constant(args.b, q)
    ref = -oracle.euler_gamma() - oracle.digamma(args.b + 1)
    return _record("hp-const", {"b": args.b}, c.value, _residual(c.value, ref), regime=c.regime.regime.value)


COMMANDS = {
    "partial": cmd_partial,
    "series": cmd_series,
    "lerch": cmd_lerch,
    "polylog": cmd_polylog,
    "hurwitz-neg": cmd_hurwitz_neg,
    "hp-const": cmd_hp_const,
}


def _dumps(obj) -> str:
    # inf/nan are not JSON; emit them as strings
    def clean(x):
        if isinstance(x, float) and not math.isfinite(x):
            return str(x)
        if isinstance(x, dict):
            return {k: clean(v) for k, v in x.items()}
        if isinstance(x, list):
            return [clean(v) for v in x]
        return x
    return json.dumps(clean(obj), sort_keys=True)


def cmd_verify(args, cfg: verify.RunConfig, out=None) -> int:
    out = out or sys.stdout
    reports = verify.run(args.suite, cfg)
    if cfg.output_format == "csv":
        w = csv.DictWriter(out, fieldnames=verify.CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in reports:
            w.writerow(verify.csv_row(r))
    else:
        for r in reports:
            out.write(_dumps(r.to_dict()) + "\n")
    for r in reports:
        if not r.passed:
            print(f"FAIL {r.identity_id} rel_err={r.rel_err:.3g} abs_err={r.abs_err:.3g}"
                  + (f" ({r.skipped_reason})" if r.skipped_reason else ""), file=sys.stderr)
    print(f"{args.suite}: {verify.summary(reports)} passed", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


_VALUE_FLAGS = ("-a", "-b", "-m")


def _glue_values(argv: list[str]) -> list[str]:
    """Turn ``-m -1+2I`` into ``-m=-1+2I`` so argparse does not read the value as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        cfg = load_config(args)
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "verify":
            return cmd_verify(args, cfg)
        record = COMMANDS[args.command](args, cfg.quad)
        print(_dumps(record))
        return EXIT_OK
    except DomainError as exc:
        print(f"domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"convergence failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
