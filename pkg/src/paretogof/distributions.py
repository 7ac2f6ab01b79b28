"""Pareto type I primitives and samplers for the alternative distributions.

The null model is the Pareto type I distribution on [1, inf) with
distribution function F(x) = 1 - x**(-beta) for some shape beta > 0.
The shape is always estimated by the method of moments,
betahat = mean / (mean - 1).

Every alternative sampler produces values on [1, inf): families whose
textbook densities live on [0, inf) (beta-exponential, Dhillon) are
shifted by +1 so that the shape estimator stays defined under every
alternative.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, EstimationError

__all__ = [
    "Family",
    "AlternativeSpec",
    "Sample",
    "pareto_cdf",
    "pareto_quantile",
    "sample_pareto",
    "mom_estimate",
    "sample_alternative",
    "LOGNORMAL_MIX_BETA",
    "EXPONENTIAL_MIX_BETA",
]

# Pareto shapes of the mixtures' null components: the lognormal mixture
# solves beta / (beta - 1) = e^{1/2} (the mean of the exponentiated
# standard normal factor), the exponential mixture solves
# beta / (beta - 1) = 3/2 (the mean of its shifted contaminant).
LOGNORMAL_MIX_BETA = 1.0 / (1.0 - math.exp(-0.5))
EXPONENTIAL_MIX_BETA = 3.0


def pareto_cdf(x, beta: float):
    """Distribution function 1 - x**(-beta) of the Pareto law on [1, inf).

    Accepts a scalar or an array; raises :class:`DomainError` for x < 1.
    """
    if beta <= 0:
        raise DomainError(f"shape must be positive, got {beta}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 1.0):
        raise DomainError("pareto_cdf is defined on [1, inf) only")
    out = 1.0 - x ** (-beta)
    return out if out.ndim else float(out)


def pareto_quantile(u, beta: float):
    """Inverse of :func:`pareto_cdf`: (1 - u)**(-1/beta) for u in [0, 1)."""
    if beta <= 0:
        raise DomainError(f"shape must be positive, got {beta}")
    u = np.asarray(u, dtype=float)
    if np.any((u < 0.0) | (u >= 1.0)):
        raise DomainError("quantile argument must lie in [0, 1)")
    out = (1.0 - u) ** (-1.0 / beta)
    return out if out.ndim else float(out)


def sample_pareto(n: int, beta: float, rng: np.random.Generator) -> np.ndarray:
    """Draw n values from the Pareto law by inverse transform."""
    if n < 1:
        raise ValueError("need at least one draw")
    return (1.0 - rng.random(n)) ** (-1.0 / beta)


def mom_estimate(values) -> float:
    """Method-of-moments shape estimate mean / (mean - 1).

    Raises :class:`EstimationError` when the sample mean is <= 1, where the
    estimator is undefined or nonpositive.  Callers running Monte Carlo
    loops catch this and redraw the replication.
    """
    values = getattr(values, "values", values)
    mean = float(np.mean(values))
    if mean <= 1.0:
        raise EstimationError(f"sample mean {mean:.6g} <= 1; shape estimate undefined")
    return mean / (mean - 1.0)


class Family(enum.Enum):
    """Data-generating families available to the power study."""

    PARETO = "P"
    GAMMA = "GAMMA"
    WEIBULL = "W"
    LOGNORMAL = "LN"
    LINEAR_FAILURE_RATE = "LFR"
    BETA_EXPONENTIAL = "BEX"
    DHILLON = "DH"
    HALF_NORMAL = "HN"
    LOGNORMAL_MIXTURE = "LNMIX"
    EXPONENTIAL_MIXTURE = "EXPMIX"


_MIXTURES = (Family.LOGNORMAL_MIXTURE, Family.EXPONENTIAL_MIXTURE)

# accepted spelling -> family (case-insensitive)
_ALIASES = {
    "P": Family.PARETO,
    "PARETO": Family.PARETO,
    "GAMMA": Family.GAMMA,
    "GAM": Family.GAMMA,
    "G": Family.GAMMA,
    "W": Family.WEIBULL,
    "WEIBULL": Family.WEIBULL,
    "LN": Family.LOGNORMAL,
    "LOGNORMAL": Family.LOGNORMAL,
    "LFR": Family.LINEAR_FAILURE_RATE,
    "LF": Family.LINEAR_FAILURE_RATE,
    "BEX": Family.BETA_EXPONENTIAL,
    "BE": Family.BETA_EXPONENTIAL,
    "DH": Family.DHILLON,
    "D": Family.DHILLON,
    "HN": Family.HALF_NORMAL,
    "LNMIX": Family.LOGNORMAL_MIXTURE,
    "EXPMIX": Family.EXPONENTIAL_MIXTURE,
}


@dataclass(frozen=True)
class AlternativeSpec:
    """A data-generating distribution: a family plus its parameter.

    ``theta`` is the shape parameter for the fixed families and the
    contamination probability for the two mixture families.
    """

    family: Family
    theta: float

    def __post_init__(self):
        if self.family in _MIXTURES:
            if not 0.0 <= self.theta <= 1.0:
                raise ValueError(
                    f"mixture weight must lie in [0, 1], got {self.theta}"
                )
        elif self.theta <= 0.0:
            raise ValueError(f"{self.family.value} parameter must be positive")

    @property
    def label(self) -> str:
        theta = f"{self.theta:g}"
        return f"{self.family.value}({theta})"

    @classmethod
    def parse(cls, text: str) -> "AlternativeSpec":
        """Parse labels such as ``P(2)``, ``W(1.5)`` or ``LNMIX(0.9)``."""
        m = re.fullmatch(r"\s*([A-Za-z]+)\s*\(\s*([-+0-9.eE]+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"cannot parse alternative {text!r}; expected NAME(theta)")
        name = m.group(1).upper()
        if name not in _ALIASES:
            raise ValueError(f"unknown distribution family {m.group(1)!r}")
        return cls(_ALIASES[name], float(m.group(2)))


@dataclass(frozen=True)
class Sample:
    """An observed sample with its order statistics cached.

    ``sorted`` is always the ascending rearrangement of ``values``.
    """

    values: np.ndarray
    sorted: np.ndarray = field(repr=False)

    @classmethod
    def from_values(cls, values) -> "Sample":
        arr = np.asarray(values, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("sample must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("sample contains nonfinite values")
        return cls(values=arr, sorted=np.sort(arr))

    @property
    def n(self) -> int:
        return self.values.size


def as_sorted(values) -> np.ndarray:
    """Ascending float array from a Sample, array or sequence."""
    if isinstance(values, Sample):
        return values.sorted
    arr = np.asarray(values, dtype=float)
    return np.sort(arr)


def _draw(spec: AlternativeSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    f, t = spec.family, spec.theta
    if f is Family.PARETO:
        return sample_pareto(n, t, rng)
    if f is Family.GAMMA:
        return 1.0 + rng.gamma(t, 1.0, size=n)
    if f is Family.WEIBULL:
        return 1.0 + rng.exponential(size=n) ** (1.0 / t)
    if f is Family.LOGNORMAL:
        return 1.0 + np.exp(t * rng.standard_normal(n))
    if f is Family.LINEAR_FAILURE_RATE:
        e = rng.exponential(size=n)
        return 1.0 + (-1.0 + np.sqrt(1.0 + 2.0 * t * e)) / t
    if f is Family.BETA_EXPONENTIAL:
        u = rng.random(n)
        return 1.0 - np.log1p(-(u ** (1.0 / t)))
    if f is Family.DHILLON:
        e = rng.exponential(size=n)
        return 1.0 + np.expm1(e ** (1.0 / (t + 1.0)))
    if f is Family.HALF_NORMAL:
        return 1.0 + t * np.abs(rng.standard_normal(n))
    if f is Family.LOGNORMAL_MIXTURE:
        pick = rng.random(n) < t
        heavy = 1.0 + np.exp(rng.standard_normal(n))
        null = sample_pareto(n, LOGNORMAL_MIX_BETA, rng)
        return np.where(pick, heavy, null)
    if f is Family.EXPONENTIAL_MIXTURE:
        pick = rng.random(n) < t
        heavy = 1.0 + rng.exponential(0.5, size=n)
        null = sample_pareto(n, EXPONENTIAL_MIX_BETA, rng)
        return np.where(pick, heavy, null)
    raise ValueError(f"unhandled family {f!r}")


def sample_alternative(spec: AlternativeSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n observations from the given alternative.

    All draws lie on [1, inf).  Mixture families draw a fixed amount of
    randomness regardless of the realised component labels, so the output
    is reproducible from the stream state alone.
    """
    if n < 1:
        raise ValueError("need at least one draw")
    return _draw(spec, n, rng)


def alternative_cdf(spec: AlternativeSpec, x) -> np.ndarray:
    """Analytic distribution function of an alternative, used for checks.

    Closed forms exist for every family except the gamma, which delegates
    to :mod:`scipy`.
    """
    x = np.asarray(x, dtype=float)
    y = x - 1.0
    f, t = spec.family, spec.theta
    if f is Family.PARETO:
        return np.where(x < 1.0, 0.0, 1.0 - np.maximum(x, 1.0) ** (-t))
    if f is Family.GAMMA:
        from scipy.stats import gamma as _gamma

        return _gamma.cdf(y, t)
    if f is Family.WEIBULL:
        return np.where(y < 0.0, 0.0, 1.0 - np.exp(-np.maximum(y, 0.0) ** t))
    if f is Family.LOGNORMAL:
        from scipy.stats import norm as _norm

        out = np.zeros_like(y)
        pos = y > 0
        out[pos] = _norm.cdf(np.log(y[pos]) / t)
        return out
    if f is Family.LINEAR_FAILURE_RATE:
        yy = np.maximum(y, 0.0)
        return np.where(y < 0.0, 0.0, 1.0 - np.exp(-yy - t * yy * yy / 2.0))
    if f is Family.BETA_EXPONENTIAL:
        return np.where(y < 0.0, 0.0, (-np.expm1(-np.maximum(y, 0.0))) ** t)
    if f is Family.DHILLON:
        yy = np.maximum(y, 0.0)
        return np.where(y < 0.0, 0.0, 1.0 - np.exp(-(np.log1p(yy) ** (t + 1.0))))
    if f is Family.HALF_NORMAL:
        from scipy.stats import norm as _norm

        return np.where(y < 0.0, 0.0, 2.0 * _norm.cdf(np.maximum(y, 0.0) / t) - 1.0)
    if f is Family.LOGNORMAL_MIXTURE:
        from scipy.stats import norm as _norm

        heavy = np.zeros_like(y)
        pos = y > 0
        heavy[pos] = _norm.cdf(np.log(y[pos]))
        null = alternative_cdf(AlternativeSpec(Family.PARETO, LOGNORMAL_MIX_BETA), x)
        return t * heavy + (1.0 - t) * null
    if f is Family.EXPONENTIAL_MIXTURE:
        heavy = np.where(y < 0.0, 0.0, -np.expm1(-np.maximum(y, 0.0) / 0.5))
        null = alternative_cdf(AlternativeSpec(Family.PARETO, EXPONENTIAL_MIX_BETA), x)
        return t * heavy + (1.0 - t) * null
    raise ValueError(f"unhandled family {f!r}")
