import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koshlab.complexcore import (
    EvalResult,
    carg,
    cauchy_derivative,
    cpow_principal,
    csqrt_principal,
    digamma,
    gamma,
    hyp2f1,
    removable_value,
    rgamma,
    zeta,
)
from koshlab.errors import DomainError, PoleError, UnsupportedRegionError

from conftest import close

# reference values computed with mpmath at 30 digits
GAMMA_CASES = [
    (0.5, 1.772453850905516),
    (3.7, 4.170651783796604),
    (2 + 3j, -0.08239527266561189 + 0.09177428743525931j),
    (-2.5 + 0.5j, -0.33387520352243233 - 0.20645730796360842j),
    (0.1 - 7j, 1.847258471388663e-05 + 5.625609535565905e-06j),
]
ZETA_CASES = [
    (3, 1.2020569031595942),
    (0.5, -1.4603545088095868),
    (0.5 + 14j, 0.02224114260999359 - 0.10325812326645006j),
    (-3.5 + 1j, 0.004550671483806785 + 0.012344456932855458j),
    (2 - 1j, 1.1503557032549028 + 0.4375308659196079j),
    (-0.75, -0.13364277443658457),
]
HYP_CASES = [
    ((0.5, 0.25, 1.5, 0.6), 1.0672948846135224),
    ((1, 1, 2, -0.9), 0.7131709846359942),
    ((0.3 + 0.2j, 1.1, 2.5, 0.2 + 0.85j), 0.918145609989384 + 0.10033223240951061j),
    ((2, 0.5, 1.25, -3), 0.37770059226848807),
]


@pytest.mark.parametrize("z,expected", GAMMA_CASES)
def test_gamma_reference(z, expected):
    assert close(gamma(z), expected, 1e-13)


@pytest.mark.parametrize("s,expected", ZETA_CASES)
def test_zeta_reference(s, expected):
    assert close(zeta(s), expected, 1e-12)


@pytest.mark.parametrize("z,expected", [(1, -0.5772156649015329), (2.5 + 1j, 0.809776810544049 + 0.4572482101235716j),
                                        (-0.5, 0.03648997397857652)])
def test_digamma_reference(z, expected):
    assert close(digamma(z), expected, 1e-12)


@pytest.mark.parametrize("args,expected", HYP_CASES)
def test_hyp2f1_reference(args, expected):
    r = hyp2f1(*args)
    assert close(r.value, expected, 1e-13)
    assert abs(r.value - expected) <= r.abs_err + 1e-15 * abs(expected)


def test_special_values():
    assert zeta(0) == -0.5
    assert close(zeta(2), math.pi**2 / 6, 1e-12)
    assert close(gamma(5), 24, 0)
    assert close(hyp2f1(-1.5, -1, 0.5, 0.25).value, 1.75, 1e-12)
    assert hyp2f1(0.3, 0.7, 1.2, 0).value == 1


@pytest.mark.parametrize("lam,z", [(0.5, 0.3), (2.0, -0.9 + 0.1j), (1 + 1j, 0.5j)])
def test_hyp2f1_b_zero_terminates(lam, z):
    assert hyp2f1(lam, 0, lam + 1, z).value == 1


def test_hyp2f1_closed_form_family():
    # 2F1(-1/2 - s, -s; 1/2; x) = ((1 - sqrt x)^{2s+1} + (1 + sqrt x)^{2s+1}) / 2
    for s, x in [(1.0, 0.25), (0.3, 0.5), (2.5, 0.1)]:
        r = math.sqrt(x)
        expected = 0.5 * ((1 - r) ** (2 * s + 1) + (1 + r) ** (2 * s + 1))
        assert close(hyp2f1(-0.5 - s, -s, 0.5, x).value, expected, 1e-12)


def test_errors():
    with pytest.raises(PoleError):
        gamma(-3)
    with pytest.raises(PoleError):
        zeta(1)
    with pytest.raises(DomainError):
        hyp2f1(1, 1, -2, 0.5)
    with pytest.raises(UnsupportedRegionError):
        hyp2f1(0.5, 0.5, 1.5, 1.5)
    with pytest.raises(DomainError):
        cpow_principal(0, -1)


def test_evalresult_invariants():
    with pytest.raises(ValueError):
        EvalResult(1.0, -1.0)
    with pytest.raises(ValueError):
        EvalResult(1.0, 0.0, 0)


def test_principal_branches():
    assert csqrt_principal(-4) == 2j
    assert csqrt_principal(complex(-4, -0.0)) == 2j
    assert close(cpow_principal(-1, 0.5), 1j, 1e-15)
    assert rgamma(-2) == 0


def test_removable_and_derivative():
    assert close(removable_value(lambda z: cmath.sin(z) / z, 0, 0.5), 1, 1e-14)
    assert close(cauchy_derivative(cmath.exp, 0.3, 0.5), cmath.exp(0.3), 1e-13)


cplx = st.complex_numbers(min_magnitude=0.0, max_magnitude=8.0, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(cplx)
def test_gamma_recurrence(z):
    if abs(z - round(z.real)) < 1e-3 and z.real < 0.5:
        return
    assert close(gamma(z + 1), z * gamma(z), 1e-11)


@settings(max_examples=60, deadline=None)
@given(st.floats(-6, 6).filter(lambda x: abs(x - round(x)) > 1e-3), st.floats(-3, 3))
def test_gamma_reflection(x, y):
    z = complex(x, y)
    assert close(gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z), math.pi, 1e-11)


@settings(max_examples=60, deadline=None)
@given(st.floats(-6, 7), st.floats(-10, 10))
def test_zeta_functional_equation(x, y):
    s = complex(x, y)
    if abs(s - 1) < 0.05 or abs(s) < 0.05 or (abs(y) < 1e-3 and abs(x - round(x)) < 1e-3):
        return
    rhs = 2**s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2) * gamma(1 - s) * zeta(1 - s)
    lhs = zeta(s)
    scale = max(abs(lhs), abs(rhs), 1.0)
    assert abs(lhs - rhs) <= 1e-10 * scale


@pytest.mark.parametrize("z, expected", [(2 + 5e-324j, 0.0), (complex(-2, -0.0), -math.pi), (-2 + 0.0j, math.pi), (1j, math.pi / 2)])
def test_carg_subnormal_and_signed_zero(z, expected):
    assert carg(z) == expected
