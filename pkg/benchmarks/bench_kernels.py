"""Time the compiled summation kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sizes 1000 100000 1000000]

Prints one row per (kernel, n) with the best-of-repeat time for each backend,
the speedup, and the absolute difference between the two results.
"""

import argparse
import timeit

from lerchphi import _pykernels

try:
    from lerchphi import _ckernels
except ImportError:
    _ckernels = None

CASES = {
    "phase_power_sum": lambda mod, n: mod.phase_power_sum(-1e-4 + 0.7j, 1.0 + 0j, 0.25 + 0j, 2, 1, n),
    "power_sum": lambda mod, n: mod.power_sum(3, 1.0 + 0j, 0.25 + 0.1j, n),
}


def best_time(fn, repeat: int) -> float:
    number = 1
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sizes", type=int, nargs="+", default=[1_000, 100_000, 1_000_000])
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'kernel':<16} {'n':>9} {'cython s':>11} {'python s':>11} {'speedup':>8} {'|diff|':>10}")
    for name, call in CASES.items():
        for n in args.sizes:
            tc = best_time(lambda: call(_ckernels, n), args.repeat)
            tp = best_time(lambda: call(_pykernels, n), args.repeat)
            diff = abs(call(_ckernels, n) - call(_pykernels, n))
            print(f"{name:<16} {n:>9} {tc:>11.3e} {tp:>11.3e} {tp / tc:>8.2f} {diff:>10.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
