# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled summation kernels.

Complex arithmetic is spelled out on (re, im) pairs so the module does not
depend on the C99 complex ABI.  Both kernels use Neumaier compensation on
each component; summation order is fixed (ascending j).
"""

from libc.math cimport exp, cos, sin, fabs


cdef inline void _neumaier(double x, double *s, double *c) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


cdef inline void _inv_pow(double zr, double zi, int k,
                          double *outr, double *outi) noexcept nogil:
    # 1 / z**k by binary powering followed by one complex reciprocal
    cdef double pr = 1.0, pi_ = 0.0, br = zr, bi = zi, tr, d
    cdef int e = k
    while e > 0:
        if e & 1:
            tr = pr * br - pi_ * bi
            pi_ = pr * bi + pi_ * br
            pr = tr
        e >>= 1
        if e:
            tr = br * br - bi * bi
            bi = 2.0 * br * bi
            br = tr
    if fabs(pr) >= fabs(pi_):
        tr = pi_ / pr
        d = pr + pi_ * tr
        outr[0] = 1.0 / d
        outi[0] = -tr / d
    else:
        tr = pr / pi_
        d = pr * tr + pi_
        outr[0] = tr / d
        outi[0] = -1.0 / d


def phase_power_sum(double complex w, double complex a, double complex b,
                    int k, long j0, long j1):
    """Sum of exp(w*(a*j + b)) / (a*j + b)**k for j0 <= j <= j1."""
    cdef double wr = w.real, wi = w.imag
    cdef double ar = a.real, ai = a.imag, br = b.real, bi = b.imag
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0
    cdef double zr, zi, er, ei, mag, qr, qi
    cdef long j
    with nogil:
        for j in range(j0, j1 + 1):
            zr = ar * j + br
            zi = ai * j + bi
            mag = exp(wr * zr - wi * zi)
            er = mag * cos(wr * zi + wi * zr)
            ei = mag * sin(wr * zi + wi * zr)
            _inv_pow(zr, zi, k, &qr, &qi)
            _neumaier(er * qr - ei * qi, &sr, &cr)
            _neumaier(er * qi + ei * qr, &si, &ci)
    return complex(sr + cr, si + ci)


def power_sum(int k, double complex a, double complex b, long n):
    """Sum of (a*j + b)**(-k) for 1 <= j <= n."""
    cdef double ar = a.real, ai = a.imag, br = b.real, bi = b.imag
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0
    cdef double qr, qi
    cdef long j
    with nogil:
        for j in range(1, n + 1):
            _inv_pow(ar * j + br, ai * j + bi, k, &qr, &qi)
            _neumaier(qr, &sr, &cr)
            _neumaier(qi, &si, &ci)
    return complex(sr + cr, si + ci)
