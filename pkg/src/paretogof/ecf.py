"""Characteristic-function tests built on the sample-minimum characterisation.

For a continuous variable X on [1, inf) and an integer block size
2 <= m <= n, X follows a Pareto type I law exactly when X**(1/m) and
min(X_1, ..., X_m) share a distribution.  The statistics here measure a
weighted L2 distance between the empirical characteristic function of the
m-th roots and an empirical characteristic function of block minima:

* the V-statistic form averages minima over all ordered m-tuples drawn
  with replacement, which reduces to order statistics weighted by
  ``v_weights``;
* the U-statistic form averages over the C(n, m) subsets, reducing to
  ``u_weights``.

Both reductions admit closed-form double sums under a Laplace
(exp(-a|t|)) or Gaussian (exp(-a t^2)) weight, evaluated by the kernel
backend.  Naive-enumeration and quadrature oracles are included for
validating the reductions on small inputs.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _backend
from .distributions import as_sorted

__all__ = [
    "WeightKernel",
    "EcfConfig",
    "v_weights",
    "u_weights",
    "vstatistic",
    "ustatistic",
    "root_ecf",
    "min_ecf_v",
    "min_ecf_u",
    "min_ecf_naive",
    "vstatistic_by_quadrature",
    "ustatistic_by_quadrature",
    "vstatistic_by_enumeration",
]


class WeightKernel(enum.Enum):
    LAPLACE = "laplace"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class EcfConfig:
    """Tuning parameters: block size m >= 2, decay rate a > 0, kernel."""

    m: int = 3
    a: float = 2.0
    kernel: WeightKernel = WeightKernel.GAUSSIAN

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"block size m must be >= 2, got {self.m}")
        if self.a <= 0:
            raise ValueError(f"kernel decay a must be positive, got {self.a}")


def v_weights(n: int, m: int) -> np.ndarray:
    """Probability that the j-th order statistic is the minimum of an
    m-tuple drawn with replacement: [(n-j+1)^m - (n-j)^m] / n^m.

    Length n; sums to one.  Computed from ratios to stay finite for
    large n.
    """
    _check_order(n, m)
    j = np.arange(1, n + 1)
    return ((n - j + 1) / n) ** m - ((n - j) / n) ** m


def u_weights(n: int, m: int) -> np.ndarray:
    """Count of m-subsets whose minimum is the j-th order statistic:
    C(n-j, m-1) for j = 1..n-m+1.  Exact integers; sums to C(n, m).
    """
    _check_order(n, m)
    return np.array(
        [math.comb(n - j, m - 1) for j in range(1, n - m + 2)], dtype=object
    )


def _check_order(n: int, m: int) -> None:
    if m < 2 or m > n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")


@lru_cache(maxsize=256)
def _weights_cached(n: int, m: int):
    v = v_weights(n, m)
    u = u_weights(n, m).astype(float) / float(math.comb(n, m))
    v.flags.writeable = False
    u.flags.writeable = False
    return v, u


def _prepared(sample, m: int):
    x = as_sorted(sample)
    if not np.all(np.isfinite(x)):
        raise ValueError("statistic input contains nonfinite values")
    _check_order(x.size, m)
    return x, x ** (1.0 / m)


def _dispatch(kernel: WeightKernel):
    if kernel is WeightKernel.LAPLACE:
        return _backend.ecf_stat_laplace
    return _backend.ecf_stat_gauss


def vstatistic(sample, cfg: EcfConfig = EcfConfig()) -> float:
    """V-statistic form of the weighted L2 distance (with-replacement minima)."""
    x, y = _prepared(sample, cfg.m)
    v, _ = _weights_cached(x.size, cfg.m)
    return _dispatch(cfg.kernel)(x, y, v, cfg.a)


def ustatistic(sample, cfg: EcfConfig = EcfConfig()) -> float:
    """U-statistic form of the weighted L2 distance (subset minima)."""
    x, y = _prepared(sample, cfg.m)
    _, u = _weights_cached(x.size, cfg.m)
    return _dispatch(cfg.kernel)(x, y, u, cfg.a)


# ---------------------------------------------------------------------------
# test oracles: naive enumerations and quadrature of the defining integrals
# ---------------------------------------------------------------------------

_NAIVE_MAX_N = 10
_NAIVE_MAX_M = 3


def root_ecf(sample, m: int, t: float) -> complex:
    """Empirical characteristic function of the m-th roots at t."""
    x = as_sorted(sample)
    return complex(np.mean(np.exp(1j * t * x ** (1.0 / m))))


def min_ecf_v(sample, m: int, t: float) -> complex:
    """Single-sum ECF of with-replacement block minima at t."""
    x = as_sorted(sample)
    v, _ = _weights_cached(x.size, m)
    return complex(np.sum(v * np.exp(1j * t * x)))


def min_ecf_u(sample, m: int, t: float) -> complex:
    """Single-sum ECF of subset block minima at t."""
    x = as_sorted(sample)
    _, u = _weights_cached(x.size, m)
    return complex(np.sum(u * np.exp(1j * t * x[: u.size])))


def min_ecf_naive(sample, m: int, t: float, subsets: bool = False) -> complex:
    """ECF of block minima by full enumeration.  Small inputs only.

    ``subsets=False`` enumerates all n**m ordered tuples (V form);
    ``subsets=True`` enumerates the C(n, m) subsets (U form).
    """
    x = as_sorted(sample)
    n = x.size
    _check_order(n, m)
    if n > _NAIVE_MAX_N or m > _NAIVE_MAX_M:
        raise ValueError(
            f"naive enumeration limited to n <= {_NAIVE_MAX_N}, m <= {_NAIVE_MAX_M}"
        )
    if subsets:
        minima = [min(c) for c in itertools.combinations(x, m)]
    else:
        minima = [min(c) for c in itertools.product(x, repeat=m)]
    return complex(np.mean(np.exp(1j * t * np.asarray(minima))))


def _kernel_weight(cfg: EcfConfig):
    if cfg.kernel is WeightKernel.LAPLACE:
        return lambda t: math.exp(-cfg.a * abs(t))
    return lambda t: math.exp(-cfg.a * t * t)


def _stat_by_quadrature(x, cfg, min_ecf) -> float:
    from scipy.integrate import quad

    n = x.size
    y = x ** (1.0 / cfg.m)
    w = _kernel_weight(cfg)

    def integrand(t):
        phi = np.mean(np.exp(1j * t * y))
        return abs(phi - min_ecf(t)) ** 2 * w(t)

    val, _ = quad(integrand, 0.0, np.inf, epsabs=1e-14, epsrel=1e-10, limit=400)
    return 2.0 * n * val  # integrand is even in t


def vstatistic_by_quadrature(sample, cfg: EcfConfig = EcfConfig()) -> float:
    """n * integral |phi - xi|^2 w_a(t) dt by adaptive quadrature."""
    x, _ = _prepared(sample, cfg.m)
    v, _ = _weights_cached(x.size, cfg.m)
    return _stat_by_quadrature(x, cfg, lambda t: np.sum(v * np.exp(1j * t * x)))


def ustatistic_by_quadrature(
    sample, cfg: EcfConfig = EcfConfig(), naive: bool = False
) -> float:
    """n * integral |phi - psi|^2 w_a(t) dt by adaptive quadrature.

    With ``naive=True`` the minima ECF is evaluated by subset enumeration
    rather than the single-sum reduction, making the oracle independent of
    ``u_weights``.
    """
    x, _ = _prepared(sample, cfg.m)
    if naive:
        ecf = lambda t: min_ecf_naive(x, cfg.m, t, subsets=True)
    else:
        _, u = _weights_cached(x.size, cfg.m)
        ecf = lambda t: np.sum(u * np.exp(1j * t * x[: u.size]))
    return _stat_by_quadrature(x, cfg, ecf)


def vstatistic_by_enumeration(sample, cfg: EcfConfig = EcfConfig()) -> float:
    """The V statistic as an order-2m average over all index tuples.

    Expands n * integral |phi - xi|^2 w dt into three enumerated blocks
    (pair, root-vs-minimum with disjoint index slots, minimum-vs-minimum),
    with each cosine integral in closed form.  Cost n**(2m): tiny inputs
    only.
    """
    x, _ = _prepared(sample, cfg.m)
    n = x.size
    m = cfg.m
    if n**(2 * m) > 2_000_000:
        raise ValueError("enumeration oracle limited to n**(2m) <= 2e6")
    a = cfg.a
    if cfg.kernel is WeightKernel.LAPLACE:
        K = lambda d: 2.0 * a / (a * a + d * d)
    else:
        K = lambda d: math.sqrt(math.pi / a) * math.exp(-d * d / (4.0 * a))
    y = x ** (1.0 / m)

    pair = sum(K(yj - yk) for yj in y for yk in y) / n**2
    minima = [min(c) for c in itertools.product(x, repeat=m)]
    cross = sum(K(yj - mn) for yj in y for mn in minima) / (n ** (m + 1))
    both = sum(K(m1 - m2) for m1 in minima for m2 in minima) / (n ** (2 * m))
    return n * (pair - 2.0 * cross + both)
