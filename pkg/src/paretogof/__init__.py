"""Goodness-of-fit testing for the Pareto type I distribution.

Nine tests (three EDF tests, Zhang's likelihood-ratio test, a
Mellin-transform test, and four characteristic-function tests built on
the sample-minimum characterisation) with a parametric-bootstrap engine
for p-values and warp-speed Monte Carlo power studies.

The quadratic statistic kernels run on a compiled extension when
available; set ``PARETO_GOF_PURE=1`` to force the NumPy fallback.
"""

from ._backend import backend_name
from .battery import ALL_TESTS, TestStatistic, default_battery, evaluate, parse_tests
from .bootstrap import (
    BootstrapConfig,
    PowerEstimate,
    TestReport,
    pvalue,
    pvalue_many,
    warp_speed_power,
    warp_speed_power_many,
)
from .classical import edf_tests, meintanis_g, mellin_integrals, zhang_za
from .distributions import (
    AlternativeSpec,
    Family,
    Sample,
    mom_estimate,
    pareto_cdf,
    pareto_quantile,
    sample_alternative,
    sample_pareto,
)
from .ecf import (
    EcfConfig,
    WeightKernel,
    u_weights,
    ustatistic,
    v_weights,
    vstatistic,
)
from .errors import ConfigError, DomainError, EstimationError
from .power_study import PowerStudyConfig, PowerTable, load_config, run_power_study

__version__ = "0.1.0"

__all__ = [
    "ALL_TESTS",
    "AlternativeSpec",
    "BootstrapConfig",
    "ConfigError",
    "DomainError",
    "EcfConfig",
    "EstimationError",
    "Family",
    "PowerEstimate",
    "PowerStudyConfig",
    "PowerTable",
    "Sample",
    "TestReport",
    "TestStatistic",
    "WeightKernel",
    "backend_name",
    "default_battery",
    "edf_tests",
    "evaluate",
    "load_config",
    "meintanis_g",
    "mellin_integrals",
    "mom_estimate",
    "parse_tests",
    "pareto_cdf",
    "pareto_quantile",
    "pvalue",
    "pvalue_many",
    "run_power_study",
    "sample_alternative",
    "sample_pareto",
    "u_weights",
    "ustatistic",
    "v_weights",
    "vstatistic",
    "warp_speed_power",
    "warp_speed_power_many",
    "zhang_za",
]
