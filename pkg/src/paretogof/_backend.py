"""Select the statistic-kernel implementation at import time.

The compiled extension is preferred; the pure-NumPy module is used when
the extension is missing or when ``PARETO_GOF_PURE`` is set to a truthy
value in the environment.
"""

import os

from . import _kernels_py

if os.environ.get("PARETO_GOF_PURE", "").strip() not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "native"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

ecf_stat_laplace = _impl.ecf_stat_laplace
ecf_stat_gauss = _impl.ecf_stat_gauss
mellin_stat = _impl.mellin_stat


def backend_name() -> str:
    """'native' when the compiled extension is active, else 'pure'."""
    return BACKEND
