"""Backend selection for the summation kernels.

The compiled extension is used when it imports; otherwise the numpy
fallback.  Setting ``LERCHPHI_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels as fallback

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and os.environ.get("LERCHPHI_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "cython"
    _impl = compiled
else:
    BACKEND = "python"
    _impl = fallback


def phase_power_sum(w, a, b, k: int, j0: int, j1: int) -> complex:
    """Return sum_{j=j0..j1} exp(w (a j + b)) / (a j + b)^k."""
    if j1 < j0:
        return 0j
    return _impl.phase_power_sum(complex(w), complex(a), complex(b), int(k), int(j0), int(j1))


def power_sum(k: int, a, b, n: int) -> complex:
    """Return sum_{j=1..n} (a j + b)^(-k)."""
    if n <= 0:
        return 0j
    return _impl.power_sum(int(k), complex(a), complex(b), int(n))
