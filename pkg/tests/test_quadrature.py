import math

import pytest

from koshlab.bessel import bessel_j
from koshlab.errors import DomainError
from koshlab.quadrature import Algebraic, Exponential, Integrand, integrate_finite, integrate_semi_infinite


@pytest.mark.parametrize("f,a,b,expected", [
    (lambda t: 1.0, 0.0, 1.0, 1.0),
    (lambda t: t**-0.5, 0.0, 1.0, 2.0),
    (lambda t: math.log(t), 0.0, 1.0, -1.0),
    (math.sin, 0.0, math.pi, 2.0),
    (lambda t: bessel_j(0, t).value, 0.0, math.pi, 1.3475263146739904),
])
def test_finite(f, a, b, expected):
    r = integrate_finite(f, a, b, 1e-12)
    assert abs(r.value - expected) <= max(r.abs_err, 1e-12) * 4


def test_exponential_tail():
    r = integrate_semi_infinite(Integrand(lambda t: math.exp(-t), Exponential(1.0)), 1e-12)
    assert abs(r.value - 1) < 1e-12
    r = integrate_semi_infinite(Integrand(lambda t: t * t * math.exp(-2 * t), Exponential(2.0)), 1e-12)
    assert abs(r.value - 0.25) < 1e-11


def test_exponential_with_bound():
    hint = Exponential(1.0, bound=lambda t: math.exp(-t))
    r = integrate_semi_infinite(Integrand(lambda t: math.exp(-t) * math.cos(t), hint, 2 * math.pi), 1e-12)
    assert abs(r.value - 0.5) < 1e-11


def test_oscillatory_lobes():
    # int_0^inf J_0 = 1 and int_0^inf sin(t)/t = pi/2
    r = integrate_semi_infinite(Integrand(lambda t: bessel_j(0, t).value, Algebraic(0.5), math.pi, 0.75 * math.pi), 1e-11)
    assert abs(r.value - 1) < 1e-10
    assert r.tail_bound > 0
    r = integrate_semi_infinite(Integrand(lambda t: math.sin(t) / t, Algebraic(1.0), math.pi, 0.0), 1e-11)
    assert abs(r.value - math.pi / 2) < 1e-10


def test_errors():
    with pytest.raises(DomainError):
        integrate_finite(lambda t: 1.0, 1.0, 0.0, 1e-8)
    with pytest.raises(DomainError):
        integrate_semi_infinite(Integrand(lambda t: 1.0), 1e-8)
    with pytest.raises(DomainError):
        integrate_semi_infinite(Integrand(lambda t: 1.0 / (1 + t * t), Algebraic(2.0)), 1e-8)
