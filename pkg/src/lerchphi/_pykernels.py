"""Pure numpy implementations of the summation kernels.

Same contracts as the compiled ``_ckernels`` module.  Terms are generated in
fixed-size chunks and reduced with :func:`math.fsum`, so results are
deterministic and at least as accurate as the compensated C loop.
"""

import math

import numpy as np

CHUNK = 1 << 16


def _fsum_complex(parts_re, parts_im):
    return complex(math.fsum(parts_re), math.fsum(parts_im))


def phase_power_sum(w, a, b, k, j0, j1):
    """Sum of exp(w*(a*j + b)) / (a*j + b)**k for j0 <= j <= j1."""
    w, a, b = complex(w), complex(a), complex(b)
    re_parts, im_parts = [], []
    for lo in range(j0, j1 + 1, CHUNK):
        j = np.arange(lo, min(lo + CHUNK, j1 + 1), dtype=np.float64)
        z = a * j + b
        terms = np.exp(w * z) / z**k
        re_parts.append(math.fsum(terms.real))
        im_parts.append(math.fsum(terms.imag))
    return _fsum_complex(re_parts, im_parts)


def power_sum(k, a, b, n):
    """Sum of (a*j + b)**(-k) for 1 <= j <= n."""
    a, b = complex(a), complex(b)
    re_parts, im_parts = [], []
    for lo in range(1, n + 1, CHUNK):
        j = np.arange(lo, min(lo + CHUNK, n + 1), dtype=np.float64)
        terms = 1.0 / (a * j + b) ** k
        re_parts.append(math.fsum(terms.real))
        im_parts.append(math.fsum(terms.imag))
    return _fsum_complex(re_parts, im_parts)
