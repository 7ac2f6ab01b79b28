import math
import os
import subprocess
import sys

import numpy as np
import pytest

import paretogof._kernels_py as pure
from paretogof._backend import backend_name
from paretogof.ecf import u_weights, v_weights

native = pytest.importorskip("paretogof._kernels")


def cases():
    rng = np.random.default_rng(123)
    for n in (5, 20, 50, 200):
        for m in (2, 3, 4):
            x = np.sort(rng.pareto(2.0, n) + 1.0)
            y = x ** (1.0 / m)
            v = v_weights(n, m)
            u = u_weights(n, m).astype(float) / float(math.comb(n, m))
            for a in (0.5, 2.0):
                yield x, y, v, u, a


@pytest.mark.parametrize("fn", ["ecf_stat_laplace", "ecf_stat_gauss"])
def test_ecf_kernels_agree(fn):
    # the statistic is a small difference of O(n) blocks, so summation
    # order shows up at ~1e-12 absolute for n=200
    for x, y, v, u, a in cases():
        for q in (v, u):
            got = getattr(native, fn)(x, y, q, a)
            want = getattr(pure, fn)(x, y, q, a)
            assert got == pytest.approx(want, rel=1e-8, abs=1e-11)


def test_mellin_kernel_agrees():
    for x, _, _, _, a in cases():
        got = native.mellin_stat(np.log(x), 2.3, a)
        want = pure.mellin_stat(np.log(x), 2.3, a)
        assert got == pytest.approx(want, rel=1e-9, abs=1e-12)


def test_env_forces_pure_backend():
    env = dict(os.environ, PARETO_GOF_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from paretogof import backend_name; print(backend_name())"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "pure"


def test_default_backend_is_native():
    if os.environ.get("PARETO_GOF_PURE", "").strip() in ("", "0"):
        assert backend_name() == "native"
