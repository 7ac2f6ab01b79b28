# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for the quadratic-time test statistics.

These mirror the signatures in ``_kernels_py`` exactly; the package picks
one implementation at import time.
"""

from libc.math cimport exp, sqrt, M_PI


def ecf_stat_laplace(const double[::1] x, const double[::1] y,
                     const double[::1] q, double a):
    """Three-block double sum with kernel 2a / (a^2 + d^2).

    x : ascending sample values, length n
    y : ascending m-th roots of the sample values, length n
    q : minimum-rank weights summing to one, length L <= n
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t L = q.shape[0]
    cdef Py_ssize_t j, k
    cdef double aa = a * a
    cdef double d, s1 = 0.0, s2 = 0.0, s3 = 0.0, row

    with nogil:
        for j in range(n):
            s1 += 2.0 * a / aa
            for k in range(j + 1, n):
                d = y[j] - y[k]
                s1 += 2.0 * (2.0 * a / (aa + d * d))
        for j in range(L):
            row = 0.0
            for k in range(n):
                d = x[j] - y[k]
                row += 2.0 * a / (aa + d * d)
            s2 += q[j] * row
        for j in range(L):
            s3 += q[j] * q[j] * (2.0 * a / aa)
            for k in range(j + 1, L):
                d = x[j] - x[k]
                s3 += 2.0 * q[j] * q[k] * (2.0 * a / (aa + d * d))

    return s1 / n - 2.0 * s2 + n * s3


def ecf_stat_gauss(const double[::1] x, const double[::1] y,
                   const double[::1] q, double a):
    """Three-block double sum with kernel sqrt(pi/a) * exp(-d^2 / 4a)."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t L = q.shape[0]
    cdef Py_ssize_t j, k
    cdef double c = sqrt(M_PI / a)
    cdef double inv4a = 1.0 / (4.0 * a)
    cdef double d, s1 = 0.0, s2 = 0.0, s3 = 0.0, row

    with nogil:
        for j in range(n):
            s1 += 1.0
            for k in range(j + 1, n):
                d = y[j] - y[k]
                s1 += 2.0 * exp(-d * d * inv4a)
        for j in range(L):
            row = 0.0
            for k in range(n):
                d = x[j] - y[k]
                row += exp(-d * d * inv4a)
            s2 += q[j] * row
        for j in range(L):
            s3 += q[j] * q[j]
            for k in range(j + 1, L):
                d = x[j] - x[k]
                s3 += 2.0 * q[j] * q[k] * exp(-d * d * inv4a)

    return c * (s1 / n - 2.0 * s2 + n * s3)


def mellin_stat(const double[::1] logx, double beta, double a):
    """Mellin-transform test statistic from precomputed log values."""
    cdef Py_ssize_t n = logx.shape[0]
    cdef Py_ssize_t j, k
    cdef double b1 = beta + 1.0
    cdef double c, cc, pair, single = 0.0
    cdef double t_pair = 0.0

    with nogil:
        for j in range(n):
            c = a + 2.0 * logx[j]
            cc = c * c
            t_pair += (b1 * b1 / c
                       + (2.0 - 2.0 * c + cc) / (cc * c)
                       + 2.0 * b1 * (1.0 - c) / cc)
            for k in range(j + 1, n):
                c = a + logx[j] + logx[k]
                cc = c * c
                t_pair += 2.0 * (b1 * b1 / c
                                 + (2.0 - 2.0 * c + cc) / (cc * c)
                                 + 2.0 * b1 * (1.0 - c) / cc)
        for j in range(n):
            c = a + logx[j]
            single += 2.0 * b1 / c + 2.0 * (1.0 - c) / (c * c)

    return t_pair / n + beta * (n * beta / a - single)
