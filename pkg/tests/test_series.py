import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koshlab.complexcore import zeta
from koshlab.errors import CacheMissError, DomainError
from koshlab.series import (
    CONVERGED,
    DIVERGED,
    AsymptoticFamily,
    SigmaCache,
    detect_divergence,
    dirichlet_sigma_series,
    expansion_terms,
    sigma,
    sigma_series,
    sum_algebraic,
    sum_exponential,
)

from conftest import close


@pytest.mark.parametrize("s,n,expected", [(0, 6, 4), (1, 6, 12), (-1, 4, 1.75), (2, 12, 210), (0, 1, 1),
                                          (0.5, 9, 4 + 3**0.5)])
def test_sigma_values(s, n, expected):
    assert close(sigma(s, n), expected, 1e-13)


def test_sigma_batch_matches_scalar():
    cache = SigmaCache(5000)
    for s in (0, 1, -0.5 + 0.25j):
        table = cache.sigma_batch(s, 5000)
        for n in (1, 2, 97, 360, 4096, 4999):
            assert close(table[n], sigma(s, n, cache), 1e-12)


def test_cache_miss():
    cache = SigmaCache(100)
    with pytest.raises(CacheMissError):
        cache.sigma(0, 101)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 999), st.integers(1, 999), st.floats(-2, 2))
def test_sigma_multiplicative(m, n, s):
    if math.gcd(m, n) != 1:
        return
    assert close(sigma(s, m * n), sigma(s, m) * sigma(s, n), 1e-12)


def test_dirichlet_series():
    assert close(dirichlet_sigma_series(0, 2), math.pi**4 / 36, 1e-13)
    assert close(dirichlet_sigma_series(1, 3), zeta(3) * zeta(2), 1e-13)
    with pytest.raises(DomainError):
        dirichlet_sigma_series(0, 1)
    with pytest.raises(DomainError):
        dirichlet_sigma_series(1, 1.5)


def test_sum_exponential_geometric():
    r = sum_exponential(lambda n: 2.0**-n, math.log(2), 1e-14)
    assert r.verdict == CONVERGED
    assert abs(r.value - 1) < 1e-14


def test_sum_algebraic_zeta():
    r = sum_algebraic(lambda n: n**-3.0, 3.0, 1e-10)
    assert abs(r.value - zeta(3)) <= max(r.abs_err, 1e-10)


def test_divergence_detection():
    assert detect_divergence(lambda n: 1 / n) == DIVERGED
    assert detect_divergence(lambda n: 2.0**-n) == CONVERGED
    assert detect_divergence(lambda n: n**-3.0) == CONVERGED


def test_expansion_coefficients():
    # 1/(1 + u^2) = sum (-1)^k u^{2k}
    terms = expansion_terms(AsymptoticFamily(2, lambda u: 1 / (1 + u * u), 1.0), 8)
    coefs = [t.coef for t in terms]
    expected = [1, 0, -1, 0, 1, 0, -1, 0]
    assert np.allclose(coefs, expected, atol=1e-13)
    assert [t.exponent.real for t in terms] == [2 + k for k in range(8)]


@pytest.mark.parametrize("s", [0, 0.5, -0.5])
def test_sigma_series_rational(s):
    # sum sigma_s(n) / (n^2 + 1): direct partial sum to 2e5 plus a crude tail
    r = sigma_series(s, lambda n: 1 / (n * n + 1.0), [AsymptoticFamily(2, lambda u: 1 / (1 + u * u), 1.0)])
    cache = SigmaCache(200000)
    sig = cache.sigma_batch(s, 200000)[1:].real
    n = np.arange(1, 200001, dtype=float)
    brute = math.fsum(sig / (n * n + 1))
    tail = dirichlet_sigma_series(s, 2).real - math.fsum(sig / n**2)
    assert r.verdict == CONVERGED
    assert abs(r.value - (brute + tail)) < 1e-9
