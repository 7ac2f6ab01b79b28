"""Pure-NumPy implementations of the quadratic-time statistic kernels.

Fallback for environments where the compiled extension is unavailable;
also selectable explicitly via ``PARETO_GOF_PURE=1`` (the benchmark uses
this to compare backends).
"""

import math

import numpy as np


def ecf_stat_laplace(x, y, q, a):
    """Three-block double sum with kernel 2a / (a^2 + d^2)."""
    x = np.asarray(x)
    y = np.asarray(y)
    q = np.asarray(q)
    n = x.shape[0]
    aa = a * a
    xl = x[: q.shape[0]]
    d1 = y[:, None] - y[None, :]
    d2 = xl[:, None] - y[None, :]
    d3 = xl[:, None] - xl[None, :]
    s1 = float(np.sum(2.0 * a / (aa + d1 * d1)))
    s2 = float(np.sum(q[:, None] * (2.0 * a / (aa + d2 * d2))))
    s3 = float(np.sum((q[:, None] * q[None, :]) * (2.0 * a / (aa + d3 * d3))))
    return s1 / n - 2.0 * s2 + n * s3


def ecf_stat_gauss(x, y, q, a):
    """Three-block double sum with kernel sqrt(pi/a) * exp(-d^2 / 4a)."""
    x = np.asarray(x)
    y = np.asarray(y)
    q = np.asarray(q)
    n = x.shape[0]
    c = math.sqrt(math.pi / a)
    inv4a = 1.0 / (4.0 * a)
    xl = x[: q.shape[0]]
    d1 = y[:, None] - y[None, :]
    d2 = xl[:, None] - y[None, :]
    d3 = xl[:, None] - xl[None, :]
    s1 = float(np.sum(np.exp(-d1 * d1 * inv4a)))
    s2 = float(np.sum(q[:, None] * np.exp(-d2 * d2 * inv4a)))
    s3 = float(np.sum((q[:, None] * q[None, :]) * np.exp(-d3 * d3 * inv4a)))
    return c * (s1 / n - 2.0 * s2 + n * s3)


def mellin_stat(logx, beta, a):
    """Mellin-transform test statistic from precomputed log values."""
    logx = np.asarray(logx)
    n = logx.shape[0]
    b1 = beta + 1.0
    c = a + logx[:, None] + logx[None, :]
    cc = c * c
    pair = float(np.sum(b1 * b1 / c + (2.0 - 2.0 * c + cc) / (cc * c)
                        + 2.0 * b1 * (1.0 - c) / cc))
    cs = a + logx
    single = float(np.sum(2.0 * b1 / cs + 2.0 * (1.0 - cs) / (cs * cs)))
    return pair / n + beta * (n * beta / a - single)
