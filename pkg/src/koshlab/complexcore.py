"""Complex scalar special functions with principal branches.

Everything here works on Python ``complex`` values.  The branch cut of every
square root, logarithm and power is the negative real axis, with the argument
taken in (-pi, pi].
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ._accel import kernels
from .errors import (
    ConvergenceError,
    DomainError,
    NumericOverflowError,
    PoleError,
    UnsupportedRegionError,
)

Complex = complex

EULER_GAMMA = 0.57721566490153286061
PI = math.pi
# e^{i pi/4} and its conjugate; they rotate arguments onto the two
# diagonals that keep every square root in the right half-plane
EIGHTH_ROOT = cmath.exp(0.25j * math.pi)
EIGHTH_ROOT_CONJ = cmath.exp(-0.25j * math.pi)
DBL_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class EvalResult:
    """A computed value together with an absolute error bound and a work count."""

    value: complex
    abs_err: float
    evals: int = 1

    def __post_init__(self):
        if not self.abs_err >= 0.0:
            raise ValueError("abs_err must be non-negative")
        if self.evals < 1:
            raise ValueError("evals must be at least 1")


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NumericOverflowError(f"{what}: result is not finite")
    return z


def _clean(z) -> complex:
    # -0.0 imaginary parts would put values on the wrong side of the cut
    z = complex(z)
    return complex(z.real + 0.0, z.imag + 0.0)


def is_nonpositive_integer(z: complex) -> bool:
    z = complex(z)
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def sinpi(z: complex) -> complex:
    """sin(pi z) with exact reduction of the real part."""
    z = complex(z)
    n = round(z.real)
    v = cmath.sin(math.pi * complex(z.real - n, z.imag))
    return -v if n % 2 else v


def cospi(z: complex) -> complex:
    z = complex(z)
    n = round(z.real)
    v = cmath.cos(math.pi * complex(z.real - n, z.imag))
    return -v if n % 2 else v


def carg(z: complex) -> float:
    """Principal argument in (-pi, pi]; unlike cmath.phase it never raises on subnormal parts."""
    z = complex(z)
    return math.atan2(z.imag, z.real)


def csqrt_principal(z: complex) -> complex:
    """Square root with Re >= 0, and Im >= 0 on the imaginary axis."""
    z = _clean(z)
    _finite(z, "csqrt_principal")
    return _clean(cmath.sqrt(z))


def clog_principal(z: complex) -> complex:
    z = _clean(z)
    if z == 0:
        raise DomainError("z != 0", "logarithm of zero")
    return cmath.log(z)


def cpow_principal(z: complex, p: complex) -> complex:
    """exp(p Log z) on the principal branch."""
    z = _clean(z)
    p = complex(p)
    if z == 0:
        if p.real > 0:
            return 0j
        raise DomainError("z != 0 or Re(p) > 0", "zero to a power with Re(p) <= 0")
    if p.imag == 0.0 and p.real == math.floor(p.real) and abs(p.real) <= 64:
        k = int(p.real)
        return z**k if k >= 0 else 1.0 / z ** (-k)
    try:
        return _finite(cmath.exp(p * cmath.log(z)), "cpow_principal")
    except OverflowError as exc:
        raise NumericOverflowError("cpow_principal overflow") from exc


# Lanczos approximation, g = 7, nine terms
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _lanczos_log(z: complex) -> complex:
    # log Gamma(z) for Re z >= 1/2
    z = z - 1.0
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.log(_SQRT_2PI) + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(z: complex) -> complex:
    """Gamma function, reflected into the right half-plane when Re z < 1/2."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(int(z.real), "z not a nonpositive integer")
    try:
        if z.real < 0.5:
            return _finite(math.pi / (sinpi(z) * gamma(1.0 - z)), "gamma")
        if z.imag == 0.0 and z.real == math.floor(z.real) and z.real <= 30:
            return complex(math.factorial(int(z.real) - 1))
        return _finite(cmath.exp(_lanczos_log(z)), "gamma")
    except OverflowError as exc:
        raise NumericOverflowError(f"gamma overflow at {z}") from exc


def rgamma(z: complex) -> complex:
    """1/Gamma(z); entire, so it is zero at the poles of Gamma."""
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0j
    if z.real < 0.5:
        return sinpi(z) * gamma(1.0 - z) / math.pi
    return 1.0 / gamma(z)


def _bernoulli_numbers(count: int) -> list[Fraction]:
    # B_0 .. B_count via the Akiyama-Tanigawa algorithm
    out = []
    a = [Fraction(0)] * (count + 1)
    for m in range(count + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    out[1] = Fraction(-1, 2)
    return out


BERNOULLI = _bernoulli_numbers(80)
# B_{2k}/(2k)! as floats for the Euler-Maclaurin tail
_EM_COEF = [float(BERNOULLI[2 * k] / math.factorial(2 * k)) for k in range(0, 41)]


def digamma(z: complex) -> complex:
    """Logarithmic derivative of Gamma."""
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(int(z.real), "z not a nonpositive integer")
    if z.real < 0.5:
        return digamma(1.0 - z) - math.pi * cospi(z) / sinpi(z)
    acc = 0j
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0j
    p = inv2
    for k in range(1, 10):
        series += float(BERNOULLI[2 * k]) / (2 * k) * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z - series


def zeta_euler_maclaurin(s: complex, n_direct: int = 40, n_bernoulli: int = 12) -> complex:
    """Euler-Maclaurin evaluation of zeta(s), valid for any s != 1.

    Accuracy depends on ``n_direct`` against |s|; cancellation grows like
    n_direct**(1 - Re s) for negative real parts, so callers evaluating there
    should use few direct terms and more Bernoulli corrections.
    """
    s = complex(s)
    if s == 1:
        raise PoleError(1, "s != 1")
    if n_bernoulli > 40:
        raise ValueError("at most 40 Bernoulli corrections are tabulated")
    n = n_direct
    acc_re: list[float] = []
    acc_im: list[float] = []
    for j in range(1, n):
        v = cmath.exp(-s * math.log(j))
        acc_re.append(v.real)
        acc_im.append(v.imag)
    direct = complex(math.fsum(acc_re), math.fsum(acc_im))
    log_n = math.log(n)
    n_pow = cmath.exp(-s * log_n)
    total = direct + n * n_pow / (s - 1.0) + 0.5 * n_pow
    poch = s
    term_pow = n_pow / n
    for k in range(1, n_bernoulli + 1):
        total += _EM_COEF[k] * poch * term_pow
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        term_pow /= n * n
    return total


def zeta(s: complex) -> complex:
    """Riemann zeta function.

    Euler-Maclaurin (40 direct terms, Bernoulli corrections through B_24) for
    Re s >= 1/2; the functional equation
    zeta(-t) = -2^{-t} pi^{-t-1} Gamma(1+t) zeta(1+t) sin(pi t / 2) otherwise.
    """
    s = complex(s)
    if s == 1:
        raise PoleError(1, "s != 1")
    if s == 0:
        return complex(-0.5)
    if s.real >= 0.5:
        return zeta_euler_maclaurin(s, 40, 12)
    t = -s
    try:
        val = (
            -cmath.exp(-t * math.log(2.0) - (t + 1.0) * math.log(math.pi))
            * gamma(1.0 + t)
            * zeta_euler_maclaurin(1.0 + t, 40, 12)
            * sinpi(0.5 * t)
        )
    except OverflowError as exc:
        raise NumericOverflowError(f"zeta overflow at {s}") from exc
    return _finite(val, "zeta")


_HYP_RTOL = 1e-17
_HYP_MAX_TERMS = 100_000


def hyp2f1(a: complex, b: complex, c: complex, z: complex) -> EvalResult:
    """Gauss hypergeometric function inside the unit disk.

    Terminating series are summed exactly.  Otherwise the power series is used
    for |z| <= 0.7, and Pfaff's transformation z -> z/(z-1) when it shrinks the
    argument.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if is_nonpositive_integer(c):
        raise DomainError("c not a nonpositive integer")
    if z == 0:
        return EvalResult(1.0 + 0j, 0.0, 1)
    for p in (a, b):
        if is_nonpositive_integer(p):
            return _hyp_terminating(a, b, c, z, int(-p.real))
    prefactor = 1.0 + 0j
    x = z
    if abs(z) > 0.7:
        w = z / (z - 1.0)
        if abs(w) < abs(z):
            prefactor = cpow_principal(1.0 - z, -b)
            a, x = c - a, w
            if is_nonpositive_integer(a):
                r = _hyp_terminating(a, b, c, x, int(-a.real))
                v = prefactor * r.value
                return EvalResult(v, abs(prefactor) * r.abs_err + 4 * DBL_EPS * abs(v), r.evals)
    if abs(x) >= 1.0:
        raise UnsupportedRegionError("|z| < 1 after transformation", f"z = {z}")
    total, abs_total, last, n_terms, converged = kernels.hyp2f1_series(
        a, b, c, x, _HYP_RTOL, _HYP_MAX_TERMS
    )
    total = complex(total)
    if not converged:
        raise ConvergenceError("hyp2f1 series did not converge", best=prefactor * total)
    tail = last * abs(x) / (1.0 - abs(x))
    value = prefactor * total
    err = abs(prefactor) * (tail + 4 * DBL_EPS * abs_total * math.sqrt(n_terms)) + 4 * DBL_EPS * abs(value)
    return EvalResult(value, err, n_terms)


def _hyp_terminating(a, b, c, z, degree: int) -> EvalResult:
    term = 1.0 + 0j
    total = 1.0 + 0j
    abs_total = 1.0
    for n in range(degree):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        abs_total += abs(term)
    return EvalResult(total, 4 * DBL_EPS * abs_total, degree + 1)


def removable_value(f: Callable[[complex], complex], z0: complex, radius: float, nodes: int = 32) -> complex:
    """Value at z0 of a function analytic in a punctured disk around z0.

    The mean over a circle equals the value of the analytic continuation at the
    center, so removable singularities (0/0 forms, cancelling poles) need no
    hand-derived limit.  ``radius`` must stay inside the region of analyticity.
    """
    acc = 0j
    for k in range(nodes):
        acc += f(z0 + radius * cmath.exp(2j * math.pi * (k + 0.5) / nodes))
    return acc / nodes


def cauchy_derivative(f: Callable[[complex], complex], z0: complex, radius: float, nodes: int = 48) -> complex:
    """First derivative at z0 from samples on a circle (trapezoid rule)."""
    acc = 0j
    for k in range(nodes):
        u = cmath.exp(2j * math.pi * (k + 0.5) / nodes)
        acc += f(z0 + radius * u) / u
    return acc / (nodes * radius)
