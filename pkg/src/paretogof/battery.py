"""The nine-test battery and a common evaluation entry point.

Labels
------
KS, CVM, AD   classical EDF tests
ZA            Zhang's likelihood-ratio test
MT            Mellin-transform test (decay ``mellin_a``)
VL, VG        minimum-characterisation V statistics, Laplace / Gaussian kernel
UL, UG        minimum-characterisation U statistics, Laplace / Gaussian kernel

The characteristic-function tests are parameter-free given (m, a); the
classical tests evaluate the fitted shape, either re-estimated from the
sample they receive (``beta=None``) or held fixed by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classical import edf_tests, meintanis_g, zhang_za
from .distributions import as_sorted, mom_estimate
from .ecf import EcfConfig, WeightKernel, ustatistic, vstatistic

__all__ = ["TestStatistic", "ALL_TESTS", "default_battery", "parse_tests",
           "evaluate", "evaluate_many"]

_EDF_LABELS = ("KS", "CVM", "AD")
_ECF_LABELS = ("VL", "VG", "UL", "UG")
ALL_TESTS = _EDF_LABELS + ("ZA", "MT") + _ECF_LABELS

_CANONICAL = {label.upper(): label for label in ALL_TESTS}
_CANONICAL["CVM"] = "CVM"

_DISPLAY = {"CVM": "CvM"}


@dataclass(frozen=True)
class TestStatistic:
    """One of the nine tests plus its tuning parameters."""

    __test__ = False  # not a pytest class despite the name

    label: str
    m: int = 3
    a: float = 2.0
    mellin_a: float = 1.0

    def __post_init__(self):
        if self.label not in ALL_TESTS:
            raise ValueError(
                f"unknown test {self.label!r}; choose from {', '.join(ALL_TESTS)}"
            )
        if self.label in _ECF_LABELS:
            EcfConfig(self.m, self.a)  # validates
        if self.mellin_a <= 0:
            raise ValueError("mellin_a must be positive")

    @property
    def display(self) -> str:
        return _DISPLAY.get(self.label, self.label)

    @property
    def needs_shape(self) -> bool:
        """True when the statistic evaluates the fitted shape internally."""
        return self.label not in _ECF_LABELS

    def ecf_config(self) -> EcfConfig:
        kernel = WeightKernel.LAPLACE if self.label in ("VL", "UL") else WeightKernel.GAUSSIAN
        return EcfConfig(self.m, self.a, kernel)


def default_battery(m: int = 3, a: float = 2.0, mellin_a: float = 1.0):
    """All nine tests with shared tuning parameters."""
    return tuple(TestStatistic(lbl, m=m, a=a, mellin_a=mellin_a) for lbl in ALL_TESTS)


def parse_tests(text: str, m: int = 3, a: float = 2.0, mellin_a: float = 1.0):
    """Comma-separated labels (case-insensitive) to TestStatistic tuple."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        label = _CANONICAL.get(token.upper())
        if label is None:
            raise ValueError(
                f"unknown test {token!r}; choose from {', '.join(ALL_TESTS)}"
            )
        out.append(TestStatistic(label, m=m, a=a, mellin_a=mellin_a))
    if not out:
        raise ValueError("no tests selected")
    return tuple(out)


def evaluate(test: TestStatistic, sample, beta: float | None = None) -> float:
    """Value of one statistic on a sample.

    ``beta`` fixes the shape used by the classical tests; ``None`` lets
    them re-estimate it from the sample.  The characteristic-function
    tests ignore it.
    """
    return float(evaluate_many((test,), sample, beta=beta)[0])


def evaluate_many(tests, sample, beta: float | None = None) -> np.ndarray:
    """Values of several statistics on one sample, sorting it only once.

    The three EDF statistics are computed in a single pass when more than
    one of them is requested.
    """
    x = as_sorted(sample)
    labels = [t.label for t in tests]
    shape = beta
    if shape is None and any(t.needs_shape for t in tests):
        shape = mom_estimate(x)

    edf = edf_tests(x, shape) if any(lbl in _EDF_LABELS for lbl in labels) else None
    out = np.empty(len(labels))
    for i, t in enumerate(tests):
        if t.label == "KS":
            out[i] = edf.ks
        elif t.label == "CVM":
            out[i] = edf.cvm
        elif t.label == "AD":
            out[i] = edf.ad
        elif t.label == "ZA":
            out[i] = zhang_za(x, shape)
        elif t.label == "MT":
            out[i] = meintanis_g(x, shape, a=t.mellin_a)
        elif t.label in ("VL", "VG"):
            out[i] = vstatistic(x, t.ecf_config())
        else:
            out[i] = ustatistic(x, t.ecf_config())
    return out
