import os
import subprocess
import sys

import numpy as np
import pytest

from koshlab import _kernels_py as pure
from koshlab._accel import COMPILED, kernels

compiled_only = pytest.mark.skipif(not COMPILED, reason="compiled core not built")


@compiled_only
def test_sieve_parity():
    assert np.array_equal(np.asarray(kernels.spf_sieve(5000)), np.asarray(pure.spf_sieve(5000)))


@compiled_only
@pytest.mark.parametrize("s", [0, 1, -0.5 + 0.25j])
def test_sigma_batch_parity(s):
    spf = pure.spf_sieve(3000)
    a = np.asarray(kernels.sigma_batch(complex(s), kernels.spf_sieve(3000), 3000))
    b = np.asarray(pure.sigma_batch(complex(s), spf, 3000))
    assert np.allclose(a, b, rtol=1e-13, atol=0)


@compiled_only
@pytest.mark.parametrize("nu,q", [(0.3, -4.0), (1.5 + 0.5j, 2.0 - 1j), (0.0, -0.25)])
def test_bessel_series_parity(nu, q):
    a = kernels.bessel_series(complex(nu), complex(q), 1e-17, 200)
    b = pure.bessel_series(complex(nu), complex(q), 1e-17, 200)
    assert abs(complex(a[0]) - complex(b[0])) <= 1e-14 * a[1]


@compiled_only
def test_hyp2f1_series_parity():
    args = (0.5 + 0j, 0.25 + 0j, 1.5 + 0j, 0.6 + 0j, 1e-17, 10**5)
    a, b = kernels.hyp2f1_series(*args), pure.hyp2f1_series(*args)
    assert abs(complex(a[0]) - complex(b[0])) < 1e-15
    assert a[3] == b[3]


def test_pure_python_switch():
    env = dict(os.environ, KOSHLAB_PURE_PYTHON="1")
    code = "import koshlab; from koshlab.bessel import bessel_j; print(koshlab.COMPILED, bessel_j(0, 1).value.real)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout.split()
    assert out[0] == "False"
    assert abs(float(out[1]) - 0.7651976865579666) < 1e-15
