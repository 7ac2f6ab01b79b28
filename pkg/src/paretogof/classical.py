"""Classical competitor tests: EDF statistics, Zhang's likelihood-ratio
statistic and the Mellin-transform statistic.

All of them evaluate the fitted Pareto distribution function
u_j = 1 - X_{j:n}**(-betahat) at the order statistics; the shape may be
supplied (fixed-parameter bootstrap) or re-estimated from the sample.
"""

from __future__ import annotations

import warnings
from typing import NamedTuple

import numpy as np

from . import _backend
from .distributions import as_sorted, mom_estimate
from .errors import DomainError

__all__ = [
    "EdfStatistics",
    "edf_tests",
    "zhang_za",
    "mellin_integrals",
    "meintanis_g",
]

_U_EPS = 1e-15


class EdfStatistics(NamedTuple):
    ks: float
    cvm: float
    ad: float


def _fitted(x: np.ndarray, beta: float):
    """Fitted probabilities u = 1 - x**(-beta) and the exact -log(1 - u).

    Working from w = beta*log(x) keeps both tails accurate: u = -expm1(-w)
    avoids cancellation near the boundary and log(1 - u) = -w never
    saturates for large x.
    """
    w = beta * np.log(x)
    return -np.expm1(-w), w


def edf_tests(sample, beta: float | None = None) -> EdfStatistics:
    """Kolmogorov-Smirnov, Cramer-von Mises and Anderson-Darling statistics.

    With u_j the fitted distribution function at the ascending order
    statistics:

    * KS  = max( max_j(j/n - u_j), max_j(u_j - (j-1)/n) )
    * CvM = 1/(12n) + sum_j (u_j - (2j-1)/(2n))**2
    * AD  = -n - (1/n) sum_j (2j-1) [log u_j + log(1 - u_{n+1-j})]

    Samples containing the boundary value x = 1 have u = 0 there; those
    log arguments are clamped to 1e-15 and a RuntimeWarning is issued.
    """
    x = as_sorted(sample)
    n = x.size
    if n < 2:
        raise ValueError("EDF statistics need n >= 2")
    if beta is None:
        beta = mom_estimate(x)
    u, w = _fitted(x, beta)
    if u[0] <= 0.0:
        warnings.warn(
            "fitted probabilities at the support boundary were clamped",
            RuntimeWarning,
            stacklevel=2,
        )
        u = np.clip(u, _U_EPS, None)
    j = np.arange(1, n + 1)
    ks = max(float(np.max(j / n - u)), float(np.max(u - (j - 1) / n)))
    cvm = 1.0 / (12.0 * n) + float(np.sum((u - (2.0 * j - 1.0) / (2.0 * n)) ** 2))
    # log(1 - u_{n+1-j}) = -w_{n+1-j} exactly
    ad = -n - float(np.mean((2.0 * j - 1.0) * (np.log(u) - w[::-1])))
    return EdfStatistics(ks=ks, cvm=cvm, ad=ad)


def zhang_za(sample, beta: float | None = None) -> float:
    """Zhang's likelihood-ratio statistic

    -sum_j [ log(1 - X_{j:n}**-b) / (n-j+1/2) + log(X_{j:n}**-b) / (j-1/2) ].
    """
    x = as_sorted(sample)
    n = x.size
    if n < 2:
        raise ValueError("the Zhang statistic needs n >= 2")
    if beta is None:
        beta = mom_estimate(x)
    if x[0] <= 1.0:
        raise DomainError("Zhang statistic undefined for values at the boundary x = 1")
    u, w = _fitted(x, beta)
    j = np.arange(1, n + 1)
    # log(x**-beta) = log(1 - u) = -w
    return float(-np.sum(np.log(u) / (n - j + 0.5) - w / (j - 0.5)))


def mellin_integrals(x, a: float):
    """Closed forms of integral_0^inf (t-1)^k x**(-t) e^(-a t) dt, k = 0, 1, 2.

    With c = a + log x:  I0 = 1/c,  I1 = (1-c)/c^2,  I2 = (2-2c+c^2)/c^3.
    """
    if a <= 0:
        raise DomainError(f"weight decay a must be positive, got {a}")
    x = np.asarray(x, dtype=float)
    c = a + np.log(x)
    if np.any(c <= 0):
        raise DomainError("need a + log(x) > 0")
    i0 = 1.0 / c
    i1 = (1.0 - c) / c**2
    i2 = (2.0 - 2.0 * c + c * c) / c**3
    if x.ndim:
        return i0, i1, i2
    return float(i0), float(i1), float(i2)


def meintanis_g(sample, beta: float | None = None, a: float = 1.0) -> float:
    """Mellin-transform statistic; quadratic in n.

    Equals n * integral [ (1/n) sum_j (b+t) X_j**(-t) - b ]^2 e^(-a t) dt
    expanded into pairwise and single sums of the closed-form integrals.
    """
    x = as_sorted(sample)
    if a <= 0:
        raise DomainError(f"weight decay a must be positive, got {a}")
    if x[0] < 1.0:
        raise DomainError("Mellin statistic defined for values >= 1")
    if beta is None:
        beta = mom_estimate(x)
    return float(_backend.mellin_stat(np.log(x), beta, a))
