"""Registry of two-sided identities: each side is evaluated independently.

An entry pairs a left-hand evaluator with a right-hand evaluator over a
declared parameter domain.  Integrals go through the quadrature module,
exponentially convergent Bessel series through ``sum_exponential`` and
divisor-weighted algebraic series through ``sigma_series``; the two sides of
one identity never share an intermediate beyond those primitives.
"""
from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .bessel import bessel_i, bessel_j, bessel_k, koshliakov_kernel, m_kernel
from .complexcore import (
    EIGHTH_ROOT,
    EIGHTH_ROOT_CONJ,
    EULER_GAMMA,
    EvalResult,
    carg,
    cpow_principal,
    csqrt_principal,
    gamma,
    hyp2f1,
    removable_value,
    rgamma,
    zeta,
)
from .errors import DomainError, KoshlabError
from .quadrature import Algebraic, Exponential, Integrand, integrate_semi_infinite
from .series import (
    CONVERGED,
    DIVERGED,
    INCONCLUSIVE,
    AsymptoticFamily,
    _divergence_scan,
    sigma,
    sigma_series,
    sum_exponential,
)

PI = math.pi
EPS = EIGHTH_ROOT
EPSC = EIGHTH_ROOT_CONJ

QUAD_TOL = 1e-11
EXP_SERIES_TOL = 1e-15
ALG_SERIES_TOL = 1e-9
# relative accuracy assumed for a closed-form expression built from primitives
PRIMITIVE_REL = 1e-12

ALIASES = {
    "ρ": "rho", "ξ": "xi", "ν": "nu", "λ": "lambda", "lam": "lambda", "α": "alpha",
    "β": "beta", "γ": "gamma", "μ": "mu", "σ": "sigma",
}
GREEK = {"rho": "ρ", "xi": "ξ", "nu": "ν", "lambda": "λ", "alpha": "α", "beta": "β", "gamma": "γ", "mu": "μ"}


def canonical_name(name: str) -> str:
    return ALIASES.get(name, name)


@dataclass(frozen=True)
class Side:
    result: EvalResult
    verdict: str = CONVERGED

    @property
    def value(self) -> complex:
        return self.result.value


Point = Mapping[str, complex]
Evaluator = Callable[[Point], Side]


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    anchor: str
    param_names: tuple[str, ...]
    predicates: tuple[tuple[str, Callable[[Point], bool]], ...]
    lhs: Evaluator
    rhs: Evaluator
    default_points: tuple[dict, ...]
    kind: str = "residual"
    optional: bool = False

    def violated(self, point: Point) -> str | None:
        """The first domain predicate the point fails, or None."""
        for text, pred in self.predicates:
            try:
                ok = bool(pred(point))
            except (ValueError, ZeroDivisionError, KoshlabError):
                ok = False
            if not ok:
                return text
        return None

    def domain_predicate(self, point: Point) -> bool:
        return self.violated(point) is None

    def complete(self, params: Mapping[str, complex] | None = None) -> dict:
        """Default point overridden by ``params`` (aliases accepted)."""
        out = dict(self.default_points[0])
        for k, v in (params or {}).items():
            name = canonical_name(k)
            if name not in self.param_names:
                raise DomainError(f"parameter {name} belongs to {self.id}", f"unknown parameter {k!r}")
            out[name] = complex(v)
        return {k: complex(out[k]) for k in self.param_names}


@dataclass(frozen=True)
class VerificationReport:
    id: str
    point: dict
    lhs: EvalResult
    rhs: EvalResult
    abs_diff: float
    rel_diff: float
    tol: float
    passed: bool
    verdict: str
    wall_time: float
    failure: str | None = None
    counters: dict = field(default_factory=dict)


# ------------------------------------------------------------------ helpers


def _real(x: complex) -> float:
    return x.real if abs(x.imag) <= 1e-300 else math.nan


def _is_pos_real(x: complex) -> bool:
    return x.imag == 0 and x.real > 0


def _side_from_quad(q) -> Side:
    return Side(EvalResult(q.value, q.abs_err, max(1, q.evals)))


def _side_from_series(r, extra_err: float = 0.0, scale: complex = 1.0, shift: complex = 0.0) -> Side:
    value = scale * r.value + shift
    err = abs(scale) * r.abs_err + extra_err + PRIMITIVE_REL * (abs(scale * r.value) + abs(shift))
    return Side(EvalResult(value, err, max(1, r.terms_used)), r.verdict)


def _closed(value: complex, evals: int = 1, err: float | None = None) -> Side:
    e = PRIMITIVE_REL * abs(value) if err is None else err
    return Side(EvalResult(complex(value), e, evals))


def _bv(fn, s, z) -> complex:
    return fn(s, z).value


def _quad(f, hint, period=None, offset=0.0) -> Side:
    return _side_from_quad(integrate_semi_infinite(Integrand(f, hint, period, offset), QUAD_TOL))


def _jzero_offset(s: complex, rho: float) -> float:
    # J_s(x) ~ cos(x - s pi/2 - pi/4) vanishes near x = pi (k + s/2 + 3/4)
    return (PI * (s.real / 2 + 0.75)) / rho


def _fzero_offset(rho: float) -> float:
    # F_s(x) ~ -sqrt(2/(pi x)) sin(x - pi/4)
    return (PI / 4) / rho


# --------------------------------------------------------- building blocks


def build_A(s: complex, lam: complex, z: complex, w: complex, t: complex) -> complex:
    """1/(ZW) (1/Z + 1/W)^{2s} r^lam 2F1(lam - s, -s; lam + 1; r^2), r = (Z - W)/(Z + W).

    Z = sqrt(z^2 + i t), W = sqrt(w^2 + i t) on the principal branch.
    """
    s, lam, z, w, t = complex(s), complex(lam), complex(z), complex(w), complex(t)
    if not abs(carg(z)) < PI / 4 or not abs(carg(w)) < PI / 4 or z == 0 or w == 0:
        raise DomainError("|arg z| < π/4 and |arg w| < π/4")
    zz = csqrt_principal(z * z + 1j * t)
    ww = csqrt_principal(w * w + 1j * t)
    r = (zz - ww) / (zz + ww)
    head = 1.0 / (zz * ww) * cpow_principal(1.0 / zz + 1.0 / ww, 2 * s)
    if r == 0:
        return head * cpow_principal(0j, lam)
    return head * cpow_principal(r, lam) * hyp2f1(lam - s, -s, lam + 1.0, r * r).value


def h_fun(s: complex, lam: complex, alpha: complex, beta: complex) -> complex:
    """0 when Re(s + lam) > 0; (alpha - beta)^lam / 2^{4 lam + 1} when s = -lam."""
    s, lam = complex(s), complex(lam)
    if (s + lam).real > 0:
        return 0j
    if abs(s + lam) <= 1e-12:
        return cpow_principal(complex(alpha) - complex(beta), lam) / 2 ** (4 * lam + 1)
    raise DomainError("Re(s+λ) > 0 or s = −λ")


def _h_scaled(s, lam, alpha, beta, v):
    """Large-n profile: A(s, lam, sqrt(alpha), sqrt(beta), t) ~ t^{-lam-s-1} times this at v = 1/t."""
    a = csqrt_principal(1.0 + alpha * v)
    b = csqrt_principal(1.0 + beta * v)
    x = (alpha - beta) * v / (a + b) ** 2
    return (
        1.0 / (a * b)
        * cpow_principal(1.0 / a + 1.0 / b, 2 * s)
        * cpow_principal(alpha - beta, lam)
        * cpow_principal(a + b, -2 * lam)
        * hyp2f1(lam - s, -s, lam + 1.0, x * x).value
    )


def _ik_pair(lam, alpha, beta, n) -> complex:
    ra, rb = cmath.sqrt(n * alpha), cmath.sqrt(n * beta)
    out = 0j
    for e in (EPSC, EPS):
        out += _bv(bessel_i, lam, 2 * PI * e * (ra - rb)) * _bv(bessel_k, lam, 2 * PI * e * (ra + rb))
    return out


def _ik_rate(beta) -> float:
    rb = cmath.sqrt(beta)
    return 4 * PI * min((EPS * rb).real, (EPSC * rb).real)


def _k_pair_rate(beta) -> float:
    return _ik_rate(beta)


def _sqrt_args_ok(p) -> bool:
    a, b = p["alpha"], p["beta"]
    return (
        abs(carg(a)) < PI / 2
        and abs(carg(b)) < PI / 2
        and cmath.sqrt(a).real > cmath.sqrt(b).real > 0
    )


# ----------------------------------------------------------- integral forms


def _sommerfeld_lhs(p):
    a, rho, xi = p["a"], _real(p["rho"]), p["xi"]

    def f(t):
        r = cmath.sqrt(t * t + xi * xi)
        return t * _bv(bessel_j, 0, rho * t) * cmath.exp(-a * r) / r

    return _quad(f, Exponential(a.real), PI / rho, _jzero_offset(0j, rho))


def _sommerfeld_rhs(p):
    a, rho, xi = p["a"], p["rho"], p["xi"]
    r = cmath.sqrt(a * a + rho * rho)
    return _closed(cmath.exp(-xi * r) / r)


def _watson_lhs(p):
    a, rho, xi, s, nu = p["a"], _real(p["rho"]), p["xi"], p["s"], p["nu"]

    def f(t):
        q = t * t + xi * xi
        return t ** (s + 1) * _bv(bessel_j, s, rho * t) * _bv(bessel_k, nu, a * cmath.sqrt(q)) / cpow_principal(q, nu / 2)

    return _quad(f, Exponential(a.real), PI / rho, _jzero_offset(s, rho))


def _watson_rhs(p):
    a, rho, xi, s, nu = p["a"], p["rho"], p["xi"], p["s"], p["nu"]
    r = cmath.sqrt(a * a + rho * rho)
    k = bessel_k(nu - s - 1, xi * r)
    v = cpow_principal(rho, s) / cpow_principal(a, nu) * cpow_principal(r / xi, nu - s - 1) * k.value
    return _closed(v, k.evals)


def _fock_integrand(rho, z, w, s, nu):
    def f(t):
        zz = cmath.sqrt(t * t + z * z)
        ww = cmath.sqrt(t * t + w * w)
        r = (zz - ww) / (zz + ww)
        g = cpow_principal(r, nu) / (zz * ww)
        g *= cpow_principal(1 / zz + 1 / ww, 2 * s) * hyp2f1(nu - s, -s, nu + 1, r * r).value
        return cpow_principal(t, s + 1) * _bv(bessel_j, s, rho * t) * g

    return f


def _fock_lhs(p):
    rho, z, w, nu = _real(p["rho"]), p["z"], p["w"], p["nu"]

    def f(t):
        zz = cmath.sqrt(t * t + z * z)
        ww = cmath.sqrt(t * t + w * w)
        return t * _bv(bessel_j, 0, rho * t) * cpow_principal(zz - ww, 2 * nu) / (zz * ww * cpow_principal(z * z - w * w, nu))

    return _quad(f, Algebraic(1.5 + 2 * nu.real), PI / rho, _jzero_offset(0j, rho))


def _fock_rhs(p):
    rho, z, w, nu = p["rho"], p["z"], p["w"], p["nu"]
    i = bessel_i(nu, rho * (z - w) / 2)
    k = bessel_k(nu, rho * (z + w) / 2)
    return _closed(i.value * k.value, i.evals + k.evals)


def _koshfock_lhs(p):
    rho, z, w, s, nu = _real(p["rho"]), p["z"], p["w"], p["s"], p["nu"]
    f = _fock_integrand(rho, z, w, s, nu)
    return _quad(f, Algebraic(1.5 + s.real + 2 * nu.real), PI / rho, _jzero_offset(s, rho))


def _koshfock_rhs(p):
    rho, z, w, s, nu = p["rho"], p["z"], p["w"], p["s"], p["nu"]
    i = bessel_i(nu, rho * (z - w) / 2)
    k = bessel_k(nu, rho * (z + w) / 2)
    v = gamma(nu + 1) * rgamma(nu + s + 1) * cpow_principal(2 * rho, s) * i.value * k.value
    return _closed(v, i.evals + k.evals)


def _sonine_lhs(p):
    rho, w, nu = _real(p["rho"]), p["w"], p["nu"]

    def f(x):
        return cpow_principal(x, nu + 1) * _bv(bessel_j, nu, rho * x) / cpow_principal(x * x + w * w, 2 * nu + 1)

    return _quad(f, Algebraic(1.5 + 3 * nu.real), PI / rho, _jzero_offset(nu, rho))


def _sonine_rhs(p):
    rho, w, nu = p["rho"], p["w"], p["nu"]
    k = bessel_k(nu, rho * w)
    v = cpow_principal(rho / (2 * cmath.sqrt(w)), 2 * nu) * k.value * rgamma(2 * nu + 1)
    return _closed(v, k.evals)


def _mkernel_lhs(p):
    rho, b, xi, s, nu = _real(p["rho"]), p["b"], p["xi"], p["s"], p["nu"]

    def f(t):
        acc = 0j
        for sg in (1, -1):
            q = xi * xi + sg * 1j * t * t
            acc += _bv(bessel_k, nu, b * csqrt_principal(q)) / cpow_principal(q, nu / 2)
        return cpow_principal(t, s + 1) * m_kernel(s, rho * t).value * acc

    return _quad(f, Exponential(0.9 * b.real / math.sqrt(2)), PI / rho, _fzero_offset(rho))


def _mkernel_rhs(p):
    rho, b, xi, s, nu = p["rho"], p["b"], p["xi"], p["s"], p["nu"]
    q = 1 + s - nu
    total = 0j
    evals = 0
    for sg in (1, -1):
        u = rho * rho + sg * 1j * b * b
        rot = EPSC if sg == 1 else EPS
        k = bessel_k(q, xi * rot * csqrt_principal(u))
        evals += k.evals
        total += cmath.exp(-sg * 1j * PI / 4 * (nu + s - 1)) * k.value / cpow_principal(u, q / 2)
    v = cpow_principal(xi, q) * cpow_principal(rho, s) / cpow_principal(b, nu) * total
    return _closed(v, evals)


def _tfa_lhs(p):
    rho, z, w, s, lam = _real(p["rho"]), p["z"], p["w"], p["s"], p["lambda"]

    def f(t):
        t2 = t * t
        pair = build_A(s, lam, z, w, t2) + build_A(s, lam, z, w, -t2)
        return cpow_principal(t, s + 1) * koshliakov_kernel(s, rho * t).value * pair

    decay = s.real + 2 * lam.real + 1.5
    return _quad(f, Algebraic(decay), PI / rho, _fzero_offset(rho))


def _tfa_rhs(p):
    rho, z, w, s, lam = p["rho"], p["z"], p["w"], p["s"], p["lambda"]
    total = 0j
    evals = 0
    for e in (EPSC, EPS):
        i = bessel_i(lam, rho * e * (z - w) / 2)
        k = bessel_k(lam, rho * e * (z + w) / 2)
        total += i.value * k.value
        evals += i.evals + k.evals
    v = gamma(lam + 1) * rgamma(s + lam + 1) * cpow_principal(2 * rho, s) * total
    return _closed(v, evals)


def _sonan_lhs(p):
    rho, w, lam = _real(p["rho"]), p["w"], p["lambda"]

    def f(t):
        t2 = t * t
        pair = cpow_principal(w * w + 1j * t2, -2 * lam - 1) + cpow_principal(w * w - 1j * t2, -2 * lam - 1)
        return cpow_principal(t, lam + 1) * koshliakov_kernel(lam, rho * t).value * pair

    return _quad(f, Algebraic(1.5 + 3 * lam.real), PI / rho, _fzero_offset(rho))


def _sonan_rhs(p):
    rho, w, lam = p["rho"], p["w"], p["lambda"]
    k1 = bessel_k(lam, EPS * rho * w)
    k2 = bessel_k(lam, EPSC * rho * w)
    pair = cmath.exp(1j * PI * lam / 4) * k1.value + cmath.exp(-1j * PI * lam / 4) * k2.value
    v = rgamma(2 * lam + 1) * cpow_principal(rho / (2 * cmath.sqrt(w)), 2 * lam) * pair
    return _closed(v, k1.evals + k2.evals)


def _kpair_lhs(p):
    y, rho, w, s, nu = p["y"], _real(p["rho"]), p["w"], p["s"], p["nu"]

    def f(t):
        acc = 0j
        for sg in (1, -1):
            q = w * w + sg * 1j * t * t
            acc += _bv(bessel_k, nu, y * csqrt_principal(q)) / cpow_principal(q, nu / 2)
        return cpow_principal(t, s + 1) * koshliakov_kernel(s, rho * t).value * acc

    return _quad(f, Exponential(0.9 * y.real / math.sqrt(2)), PI / rho, _fzero_offset(rho))


def _kpair_rhs(p):
    y, rho, w, s, nu = p["y"], p["rho"], p["w"], p["s"], p["nu"]
    q = 1 + s - nu
    total = 0j
    evals = 0
    for sg in (-1, 1):
        u = y * y + sg * 1j * rho * rho
        k = bessel_k(q, w * csqrt_principal(u))
        evals += k.evals
        total += k.value / cpow_principal(u, q / 2)
    v = cpow_principal(w, q) * cpow_principal(rho, s) / cpow_principal(y, nu) * total
    return _closed(v, evals)


def _jexp_lhs(p):
    al, be, ga, nu = p["alpha"], p["beta"], _real(p["gamma"]), p["nu"]

    def f(x):
        r = cmath.sqrt(x * x + be * be)
        return _bv(bessel_j, nu, ga * x) * cmath.exp(-al * r) / r

    return _quad(f, Exponential(al.real), PI / ga, _jzero_offset(nu, ga))


def _jexp_rhs(p):
    al, be, ga, nu = p["alpha"], p["beta"], p["gamma"], p["nu"]
    root = cmath.sqrt(al * al + ga * ga)
    i = bessel_i(nu / 2, be / 2 * (root - al))
    k = bessel_k(nu / 2, be / 2 * (root + al))
    return _closed(i.value * k.value, i.evals + k.evals)


def _ilaplace_rate(p):
    return (2 * p["y"] + p["alpha"] + p["beta"]) / (p["alpha"] - p["beta"])


def _ilaplace_lhs(p):
    mu, lam = p["mu"], p["lambda"]
    c = _ilaplace_rate(p)

    def f(t):
        return cpow_principal(t, mu) * _bv(bessel_i, lam, t) * cmath.exp(-c * t)

    return _quad(f, Exponential(0.95 * (c.real - 1.0)))


def _ilaplace_rhs(p):
    mu, lam, al, be, y = p["mu"], p["lambda"], p["alpha"], p["beta"], p["y"]
    a = cmath.sqrt(y + al)
    b = cmath.sqrt(y + be)
    hg = hyp2f1(lam - mu, -mu, lam + 1, ((a - b) / (a + b)) ** 2)
    v = (
        2 ** (-3 * mu - 1) / (a * b)
        * cpow_principal(al - be, lam + mu + 1)
        * gamma(lam + mu + 1)
        * rgamma(lam + 1)
        / cpow_principal(a + b, 2 * lam)
        * cpow_principal(1 / a + 1 / b, 2 * mu)
        * hg.value
    )
    return _closed(v, hg.evals)


def _ikmom_lhs(p):
    a, nu, b, c = p["a"], p["nu"], p["b"], p["c"]

    def f(y):
        return cpow_principal(y, a - 1) * _bv(bessel_i, nu, b * y) * _bv(bessel_k, nu, c * y)

    return _quad(f, Exponential(0.95 * (c.real - abs(b.real))))


def ik_moment_direct(a, nu, b, c) -> complex:
    """Closed form of int_0^inf y^{a-1} I_nu(b y) K_nu(c y) dy via 2F1 at b^2/c^2."""
    x = (b / c) ** 2
    return (
        2 ** (a - 2) * cpow_principal(c, -a - nu) * cpow_principal(b, nu)
        * gamma(a / 2) * gamma(nu + a / 2) * rgamma(nu + 1)
        * hyp2f1(nu + a / 2, a / 2, nu + 1, x).value
    )


def ik_moment_euler(a, nu, b, c) -> complex:
    """The same moment after Euler's transformation of the 2F1."""
    x = (b / c) ** 2
    return (
        cpow_principal(2 * c, a - 2) * cpow_principal(b / c, nu)
        * gamma(a / 2) * gamma(nu + a / 2)
        / (cpow_principal(c * c - b * b, a - 1) * gamma(nu + 1))
        * hyp2f1(1 + nu - a / 2, 1 - a / 2, 1 + nu, x).value
    )


def _ikmom_rhs(p):
    return _closed(ik_moment_direct(p["a"], p["nu"], p["b"], p["c"]))


# ------------------------------------------------------------ series forms


def _exp_sum(term, rate) -> Side:
    return _side_from_series(sum_exponential(term, rate, EXP_SERIES_TOL))


def _koshvor_lhs(p):
    b = p["beta"]

    def term(n):
        r = cmath.sqrt(n * b)
        return 2 * sigma(0, n) * (_bv(bessel_k, 0, 4 * PI * EPS * r) + _bv(bessel_k, 0, 4 * PI * EPSC * r))

    return _exp_sum(term, _k_pair_rate(b))


def _rational_family(b, s):
    # 1/(b^2 + n^2) = n^{-2} / (1 + b^2 u^2)
    return AsymptoticFamily(2, lambda u: 1 / (1 + b * b * u * u), 1 / abs(b))


def _koshvor_rhs(p):
    b = p["beta"]
    r = sigma_series(0, lambda n: 1 / (b * b + n * n), [_rational_family(b, 0)], ALG_SERIES_TOL)
    shift = -EULER_GAMMA - cmath.log(b) / 2 - 1 / (4 * PI * b)
    return _side_from_series(r, scale=b / PI, shift=shift)


def _vorram_lhs(p):
    a = p["a"]

    def term(n):
        return 2 * sigma(0, n) * _bv(bessel_k, 0, 4 * PI * cmath.sqrt(a * n))

    return _exp_sum(term, 4 * PI * cmath.sqrt(a).real)


def _vorram_rhs(p):
    a = p["a"]
    la = cmath.log(a)

    def f(n):
        if abs(n - a) < 1e-12:
            return 1 / (2 * a * a)
        return (la - math.log(n)) / (a * a - n * n)

    fams = [
        AsymptoticFamily(2, lambda u: 1 / (1 - a * a * u * u), 1 / abs(a), 1),
        AsymptoticFamily(2, lambda u: -la / (1 - a * a * u * u), 1 / abs(a), 0),
    ]
    r = sigma_series(0, f, fams, ALG_SERIES_TOL)
    shift = -EULER_GAMMA / 2 - (0.25 + 1 / (4 * PI * PI * a)) * la - math.log(2 * PI) / (2 * PI * PI * a)
    return _side_from_series(r, scale=a / PI**2, shift=shift)


def _cohen_lhs(p):
    a, lam = p["a"], p["lambda"]

    def term(n):
        return sigma(-lam, n) * cpow_principal(n, lam / 2) * _bv(bessel_k, lam, 4 * PI * cmath.sqrt(n * a))

    r = sum_exponential(term, 4 * PI * cmath.sqrt(a).real, EXP_SERIES_TOL)
    return _side_from_series(r, scale=8 * PI * cpow_principal(a, lam / 2))


def _cohen_rhs(p):
    a, lam = p["a"], p["lambda"]
    k = int(round(p["k"].real))
    e = lam - 2 * k
    ae = cpow_principal(a, e)

    def f(n):
        if abs(n - a) < 1e-12:
            return e * cpow_principal(a, e - 1) / (2 * a)
        return (cpow_principal(n, e) - ae) / (n * n - a * a)

    fams = [
        AsymptoticFamily(2 - e, lambda u: 1 / (1 - a * a * u * u), 1 / abs(a)),
        AsymptoticFamily(2, lambda u: -ae / (1 - a * a * u * u), 1 / abs(a)),
    ]
    r = sigma_series(-lam, f, fams, ALG_SERIES_TOL)
    sl = cmath.sin(PI * lam / 2)
    big_a = cpow_principal(a, lam - 1) / sl - (2 * PI) ** (1 - lam) * gamma(lam)
    big_b = 2 / a * (2 * PI) ** (-lam - 1) * gamma(lam + 1) - PI * cpow_principal(a, lam) / cmath.cos(PI * lam / 2)
    finite = sum(zeta(2 * j) * zeta(2 * j - lam) * a ** (2 * j - 1) for j in range(1, k + 1))
    shift = big_a * zeta(lam) + big_b * zeta(lam + 1) + 2 / sl * finite
    return _side_from_series(r, scale=2 / sl * a ** (2 * k + 1), shift=shift)


def _dixmol_lhs(p):
    b, lam = p["beta"], p["lambda"]

    def term(n):
        r = cmath.sqrt(n * b)
        pair = cmath.exp(1j * PI * lam / 4) * _bv(bessel_k, lam, 4 * PI * EPS * r)
        pair += cmath.exp(-1j * PI * lam / 4) * _bv(bessel_k, lam, 4 * PI * EPSC * r)
        return 2 * sigma(-lam, n) * cpow_principal(n, lam / 2) * pair

    return _exp_sum(term, _k_pair_rate(b))


def _dixmol_closed(b, lam):
    def g(l):
        return (
            -gamma(l) * zeta(l) / cpow_principal(2 * PI * cmath.sqrt(b), l)
            + cpow_principal(b, l / 2 - 1) / (2 * PI) * zeta(l)
            - cpow_principal(b, l / 2) / 2 * zeta(l + 1)
        )

    for pole in (0.0, 1.0):
        if abs(lam - pole) < 0.05:
            # removable: the gamma/zeta poles cancel between the terms
            return removable_value(g, pole, 0.2) if lam == pole else _near_removable(g, lam, pole)
    return g(lam)


def _near_removable(g, lam, pole):
    # Cauchy integral over a circle around the pole that encloses lam
    nodes = 64
    radius = 0.2
    acc = 0j
    for j in range(nodes):
        u = cmath.exp(2j * PI * (j + 0.5) / nodes)
        zeta_pt = pole + radius * u
        acc += g(zeta_pt) * radius * u / (zeta_pt - lam)
    return acc / nodes


def _dixmol_rhs(p):
    b, lam = p["beta"], p["lambda"]
    r = sigma_series(-lam, lambda n: 1 / (b * b + n * n), [_rational_family(b, -lam)], ALG_SERIES_TOL)
    return _side_from_series(r, scale=cpow_principal(b, lam / 2 + 1) / PI, shift=_dixmol_closed(b, lam))


def _dixmolgen_lhs(p):
    b, s = p["beta"], p["s"]

    def term(n):
        x = 2 * PI * cmath.sqrt(2 * n * b)
        return sigma(s, n) * cmath.exp(-x) * cmath.cos(x)

    return _exp_sum(term, 2 * PI * math.sqrt(2) * cmath.sqrt(b).real)


def _conj_power_family(b, p_exp, extra: complex = 0j):
    # (b + i n)^{-p} + (b - i n)^{-p} = n^{-p} phi(1/n)
    ip = cmath.exp(-0.5j * PI * p_exp)
    im = cmath.exp(0.5j * PI * p_exp)

    def phi(u):
        return ip * cpow_principal(1 - 1j * b * u, -p_exp) + im * cpow_principal(1 + 1j * b * u, -p_exp) + extra

    return AsymptoticFamily(p_exp, phi, 1 / abs(b))


def _conj_power(b, n, p_exp):
    return cpow_principal(b + 1j * n, -p_exp) + cpow_principal(b - 1j * n, -p_exp)


def _dixmolgen_rhs(p):
    b, s = p["beta"], p["s"]
    pe = s + 1.5
    r = sigma_series(s, lambda n: _conj_power(b, n, pe), [_conj_power_family(b, pe)], ALG_SERIES_TOL)
    g = gamma(pe)
    zs = zeta(-s)
    shift = -zs / 2 + g * zs / (2 * math.sqrt(PI) * cpow_principal(2 * PI * b, s + 1))
    scale = cmath.sqrt(b) * g / (2 ** (s + 2) * PI ** (s + 1.5))
    return _side_from_series(r, scale=scale, shift=shift)


def _hardy_lhs(p):
    b = p["beta"]

    def term(n):
        x = 2 * PI * cmath.sqrt(2 * n * b)
        return sigma(0, n) * cmath.exp(-x) * cmath.cos(x)

    return _exp_sum(term, 2 * PI * math.sqrt(2) * cmath.sqrt(b).real)


def _hardy_rhs(p):
    b = p["beta"]
    r = sigma_series(0, lambda n: _conj_power(b, n, 1.5), [_conj_power_family(b, 1.5)], ALG_SERIES_TOL)
    return _side_from_series(r, scale=cmath.sqrt(b) / (8 * PI), shift=0.25 - 1 / (16 * PI * b))


def _thm_lhs(p):
    al, be, s, lam = p["alpha"], p["beta"], p["s"], p["lambda"]

    def term(n):
        return sigma(s, n) * _ik_pair(lam, al, be, n)

    return _exp_sum(term, _ik_rate(be))


def _thm_common(al, be, s, lam):
    ra, rb = cmath.sqrt(al), cmath.sqrt(be)
    r = (ra - rb) / (ra + rb)
    rl = cpow_principal(r, lam)
    zs = zeta(-s)
    g = gamma(lam + s + 1) * rgamma(lam + 1)
    hg = hyp2f1(lam - s, -s, lam + 1, r * r).value
    closed = -zs / (2 * lam) * rl
    closed += zs * g / (2 ** (3 * s + 2) * PI ** (s + 1) * cmath.sqrt(al * be)) * rl * cpow_principal(1 / ra + 1 / rb, 2 * s) * hg
    pref = g / (2 ** (3 * s + 2) * PI ** (s + 1))
    return ra, rb, closed, pref


def _thm_series(al, be, s, lam, correction: bool):
    ra, rb = cmath.sqrt(al), cmath.sqrt(be)
    p0 = lam + s + 1
    corr = 0j
    if correction:
        corr = 2 ** (2 * s - 2 * lam + 1) * cpow_principal(al - be, lam) * cmath.sin(PI / 2 * (lam + s))

    def f(n):
        v = build_A(s, lam, ra, rb, n) + build_A(s, lam, ra, rb, -n)
        if correction:
            v += corr * cpow_principal(n, -p0)
        return v

    ep = cmath.exp(-0.5j * PI * p0)
    em = cmath.exp(0.5j * PI * p0)

    def phi(u):
        return ep * _h_scaled(s, lam, al, be, -1j * u) + em * _h_scaled(s, lam, al, be, 1j * u) + corr

    radius = 1 / max(abs(al), abs(be))
    return sigma_series(s, f, [AsymptoticFamily(p0, phi, radius)], ALG_SERIES_TOL)


def _thm_rhs(p):
    al, be, s, lam = p["alpha"], p["beta"], p["s"], p["lambda"]
    _, _, closed, pref = _thm_common(al, be, s, lam)
    h = h_fun(s, lam, al, be)
    if h != 0:
        closed += -gamma(s + lam + 1) * zeta(1 - s) / (2 * cpow_principal(8 * PI, s) * gamma(lam + 1)) * h
    r = _thm_series(al, be, s, lam, correction=False)
    return _side_from_series(r, scale=pref, shift=closed)


def _thm_cont_rhs(p):
    al, be, s, lam = p["alpha"], p["beta"], p["s"], p["lambda"]
    _, _, closed, pref = _thm_common(al, be, s, lam)
    closed += PI**lam * cpow_principal(al - be, lam) * zeta(lam + 1) * zeta(-s - lam) / (2 ** (lam + 1) * gamma(lam + 1))
    r = _thm_series(al, be, s, lam, correction=True)
    return _side_from_series(r, scale=pref, shift=closed)


def bracket_decay_exponent(alpha, beta, s, lam, corrected: bool, n_lo: int = 200, n_hi: int = 20000) -> float:
    """Log-log decay exponent of the bracketed summand A(n) + A(-n) (+ correction)."""
    ra, rb = cmath.sqrt(alpha), cmath.sqrt(beta)
    p0 = lam + s + 1
    corr = 2 ** (2 * s - 2 * lam + 1) * cpow_principal(alpha - beta, lam) * cmath.sin(PI / 2 * (lam + s))
    ns = np.unique(np.geomspace(n_lo, n_hi, 48).astype(int))
    mags = []
    for n in ns:
        v = build_A(s, lam, ra, rb, n) + build_A(s, lam, ra, rb, -n)
        if corrected:
            v += corr * cpow_principal(n, -p0)
        mags.append(abs(v))
    slope = np.polyfit(np.log(ns), np.log(mags), 1)[0]
    return float(-slope)


def _exotic_lhs(p):
    al, be = p["alpha"], p["beta"]
    return _exp_sum(lambda n: sigma(-1, n) * _ik_pair(1, al, be, n), _ik_rate(be))


def _exotic_rhs(p):
    al, be = p["alpha"], p["beta"]
    ra, rb = cmath.sqrt(al), cmath.sqrt(be)
    r = (ra - rb) / (ra + rb)

    def ratio(t):
        x, y = cmath.sqrt(al + 1j * t), cmath.sqrt(be + 1j * t)
        return (x - y) / (x + y)

    def shape(v):
        a, b = csqrt_principal(1 + al * v), csqrt_principal(1 + be * v)
        return (a - b) / (a + b)

    fam = AsymptoticFamily(0, lambda u: shape(-1j * u) + shape(1j * u), 1 / max(abs(al), abs(be)))
    series = sigma_series(-1, lambda n: ratio(n) + ratio(-n), [fam], ALG_SERIES_TOL)
    sab = cmath.sqrt(al * be)
    closed = -PI**3 * (al - be) / 48
    closed += r / 2 * (EULER_GAMMA + cmath.log(2 * PI * sab) - 1 - (1 / r) ** 2 * cmath.log(4 * sab / (ra + rb) ** 2))
    return _side_from_series(series, scale=0.5, shift=closed)


def _ramcor_bracket_family(b, s):
    pe = s + 0.5
    return _conj_power_family(b, pe, 2 * cmath.sin(PI / 2 * (s - 0.5)))


def _ramcor_lhs(p):
    b, s = p["beta"], p["s"]
    pe = s + 0.5
    c = 2 * cmath.sin(PI / 2 * (s - 0.5))

    def f(n):
        return _conj_power(b, n, pe) + c * cpow_principal(n, -pe)

    r = sigma_series(s, f, [_ramcor_bracket_family(b, s)], ALG_SERIES_TOL)
    g = gamma(pe)
    return _side_from_series(r, scale=g / 2, shift=g * zeta(-s) / (2 * cpow_principal(b, pe)))


def _ramcor_rhs(p):
    b, s = p["beta"], p["s"]

    def term(n):
        x = 2 * PI * cmath.sqrt(2 * n * b)
        return sigma(s, n) / math.sqrt(n) * cmath.exp(-x) * cmath.sin(PI / 4 - x)

    r = sum_exponential(term, 2 * PI * math.sqrt(2) * cmath.sqrt(b).real, EXP_SERIES_TOL)
    tp = cpow_principal(2 * PI, s)
    shift = tp * (-2 * PI * cmath.sqrt(PI * b) * zeta(-s) - math.sqrt(PI / 2) * zeta(0.5) * zeta(0.5 - s))
    return _side_from_series(r, scale=tp * math.sqrt(PI), shift=shift)


def _zhs_lhs(p):
    b = p["beta"]

    def term(n):
        x = 2 * PI * cmath.sqrt(2 * n * b)
        return sigma(0, n) / math.sqrt(n) * cmath.exp(-x) * cmath.sin(PI / 4 - x)

    return _exp_sum(term, 2 * PI * math.sqrt(2) * cmath.sqrt(b).real)


def _zhs_rhs(p):
    b = p["beta"]

    def f(n):
        return 1 / cmath.sqrt(b + 1j * n) + 1 / cmath.sqrt(b - 1j * n) - math.sqrt(2) / math.sqrt(n)

    fam = _conj_power_family(b, 0.5, -math.sqrt(2))
    r = sigma_series(0, f, [fam], ALG_SERIES_TOL)
    shift = zeta(0.5) ** 2 / math.sqrt(2) - PI * cmath.sqrt(b) - 1 / (4 * cmath.sqrt(b))
    return _side_from_series(r, scale=0.5, shift=shift)


def _lam0_lhs(p):
    al, be = p["alpha"], p["beta"]
    return _exp_sum(lambda n: sigma(0, n) * _ik_pair(0, al, be, n), _ik_rate(be))


def _lam0_rhs(p):
    al, be = p["alpha"], p["beta"]
    ra, rb = cmath.sqrt(al), cmath.sqrt(be)

    def f(n):
        return 1 / (cmath.sqrt(al + 1j * n) * cmath.sqrt(be + 1j * n)) + 1 / (cmath.sqrt(al - 1j * n) * cmath.sqrt(be - 1j * n))

    def phi(u):
        return -1j / (csqrt_principal(1 - 1j * al * u) * csqrt_principal(1 - 1j * be * u)) + 1j / (
            csqrt_principal(1 + 1j * al * u) * csqrt_principal(1 + 1j * be * u)
        )

    r = sigma_series(0, f, [AsymptoticFamily(1, phi, 1 / max(abs(al), abs(be)))], ALG_SERIES_TOL)
    shift = -EULER_GAMMA / 2 + cmath.log(2 / (ra + rb)) / 2 - 1 / (8 * PI * cmath.sqrt(al * be))
    return _side_from_series(r, scale=1 / (4 * PI), shift=shift)


def _spl_lhs(p):
    b, lam = p["beta"], p["lambda"]

    def term(n):
        r = cmath.sqrt(n * b)
        pair = cmath.exp(1j * PI * lam / 4) * _bv(bessel_k, lam, 4 * PI * EPS * r)
        pair += cmath.exp(-1j * PI * lam / 4) * _bv(bessel_k, lam, 4 * PI * EPSC * r)
        return 2 * sigma(lam, n) * cpow_principal(n, lam / 2) * pair

    return _exp_sum(term, _k_pair_rate(b))


def _spl_rhs(p):
    b, lam = p["beta"], p["lambda"]
    pe = 2 * lam + 1
    c = 2 * cmath.sin(PI * lam)

    def f(n):
        return _conj_power(b, n, pe) + c * cpow_principal(n, -pe)

    r = sigma_series(lam, f, [_conj_power_family(b, pe, c)], ALG_SERIES_TOL)
    bl = cpow_principal(b, lam / 2)
    g = gamma(pe)
    if lam == 0:
        # Gamma(lam) zeta(-lam) / (2 pi sqrt b)^lam - zeta(lam+1) zeta(-2 lam) b^{lam/2} has a removable pole
        head = removable_value(lambda l: -gamma(l) * zeta(-l) / cpow_principal(2 * PI * cmath.sqrt(b), l)
                               + cpow_principal(b, l / 2) * zeta(l + 1) * zeta(-2 * l), 0.0, 0.2)
    else:
        head = -gamma(lam) * zeta(-lam) / cpow_principal(2 * PI * cmath.sqrt(b), lam) + bl * zeta(lam + 1) * zeta(-2 * lam)
    shift = head + g * zeta(-lam) / (cpow_principal(2 * PI, pe) * cpow_principal(b, 1.5 * lam + 1))
    return _side_from_series(r, scale=bl * g / cpow_principal(2 * PI, pe), shift=shift)


# ---------------------------------------------------------- divergent demo


def divergent_summand(b, s):
    """n -> sigma_s(n) ((b - i n)^{-s-1/2} - (b + i n)^{-s-1/2}) / (2i); not summable."""
    pe = s + 0.5

    def term(n):
        return sigma(s, n) / 2j * (cpow_principal(b - 1j * n, -pe) - cpow_principal(b + 1j * n, -pe))

    return term


def _p336_lhs(p):
    b, s = p["beta"], p["s"]
    verdict, used, partial = _divergence_scan(divergent_summand(b, s), 64, 10**5)
    pe = s + 0.5
    head = zeta(1 - s) / ((s - 0.5) * cpow_principal(b, s - 0.5)) + zeta(-s) * cmath.tan(PI * s / 2) / (2 * cpow_principal(b, pe))
    value = gamma(pe) * (head + partial)
    err = math.inf if verdict != CONVERGED else PRIMITIVE_REL * abs(value)
    return Side(EvalResult(value, err, used), verdict)


def _p336_rhs(p):
    b, s = p["beta"], p["s"]

    def term(n):
        x = 2 * PI * cmath.sqrt(2 * n * b)
        return sigma(s, n) / math.sqrt(n) * cmath.exp(-x) * cmath.sin(PI / 4 + x)

    r = sum_exponential(term, 2 * PI * math.sqrt(2) * cmath.sqrt(b).real, EXP_SERIES_TOL)
    tp = cpow_principal(2 * PI, s)
    shift = tp * (zeta(1 - s) / (2 * cmath.sqrt(PI * b)) - 2 * PI * cmath.sqrt(PI * b) * zeta(-s) * cmath.tan(PI * s / 2))
    return _side_from_series(r, scale=tp * math.sqrt(PI), shift=shift)


# ---------------------------------------------------------------- registry


def _re(name):
    return lambda p: p[name].real


def _pos(name):
    return (f"{GREEK.get(name, name)} > 0", lambda p: _is_pos_real(p[name]))


def _re_gt(name, bound, label=None):
    lab = label or f"Re({GREEK.get(name, name)}) > {bound}"
    return (lab, lambda p: p[name].real > bound)


_ARGS_AB = (
    ("|arg α| < π/2", lambda p: abs(carg(p["alpha"])) < PI / 2),
    ("|arg β| < π/2", lambda p: abs(carg(p["beta"])) < PI / 2),
    ("Re(√α) > Re(√β) > 0", _sqrt_args_ok),
)
_NOT_NEAR_MINUS_ONE = ("|s + 1| >= 0.05", lambda p: abs(p["s"] + 1) >= 0.05)
_ZW = (
    ("|arg z| < π/4", lambda p: abs(carg(p["z"])) < PI / 4),
    ("|arg w| < π/4", lambda p: abs(carg(p["w"])) < PI / 4),
    ("Re(z) > Re(w) > 0", lambda p: p["z"].real > p["w"].real > 0),
)


def _pts(*dicts):
    return tuple({k: complex(v) for k, v in d.items()} for d in dicts)


def _entries() -> list[IdentityEntry]:
    E = IdentityEntry
    return [
        E("sommerfeld", "Sommerfeld integral: ∫ t J₀(ρt) e^{−a√(t²+ξ²)}/√(t²+ξ²) dt = e^{−ξ√(a²+ρ²)}/√(a²+ρ²)",
          ("a", "rho", "xi"),
          (("Re(a) > |Im(ρ)|", lambda p: p["a"].real > abs(p["rho"].imag)), _pos("rho"), _re_gt("xi", 0)),
          _sommerfeld_lhs, _sommerfeld_rhs, _pts(dict(a=2, rho=1, xi=1))),
        E("watson-jk", "J–K integral: ∫ t^{s+1} J_s(ρt) K_ν(a√(t²+ξ²)) (t²+ξ²)^{−ν/2} dt",
          ("a", "rho", "xi", "s", "nu"),
          (("Re(a) > |Im(ρ)|", lambda p: p["a"].real > abs(p["rho"].imag)), _pos("rho"), _re_gt("s", -1), _re_gt("xi", 0)),
          _watson_lhs, _watson_rhs, _pts(dict(a=2, rho=1, xi=1, s=0.5, nu=0.25))),
        E("fock-bursian", "Fock–Bursian integral: ∫ t J₀(ρt) r^ν/(ZW) dt = I_ν(ρ(z−w)/2) K_ν(ρ(z+w)/2)",
          ("rho", "z", "w", "nu"),
          (_pos("rho"), ("Re(z) > Re(w) >= 0", lambda p: p["z"].real > p["w"].real >= 0),
           ("Re(2ν + 3/2) > 0", lambda p: (2 * p["nu"] + 1.5).real > 0)),
          _fock_lhs, _fock_rhs, _pts(dict(rho=1, z=2, w=1, nu=0.5))),
        E("koshliakov-fock", "J_s-kernel generalisation of the Fock–Bursian integral with a ₂F₁ weight",
          ("rho", "z", "w", "s", "nu"),
          (_pos("rho"), ("Re(z) > Re(w) >= 0", lambda p: p["z"].real > p["w"].real >= 0), _re_gt("s", -1),
           ("Re(s + 2ν + 3/2) > 0", lambda p: (p["s"] + 2 * p["nu"] + 1.5).real > 0)),
          _koshfock_lhs, _koshfock_rhs, _pts(dict(rho=1, z=2, w=1, s=0.5, nu=0.5))),
        E("sonine", "Sonine integral: ∫ x^{ν+1} J_ν(ρx) (x²+w²)^{−2ν−1} dx",
          ("rho", "w", "nu"),
          (_pos("rho"), _re_gt("w", 0), _re_gt("nu", -0.5, "Re(ν) > −1/2")),
          _sonine_lhs, _sonine_rhs, _pts(dict(rho=1, w=1, nu=0.25))),
        E("koshliakov-mkernel", "M_s-kernel integral against K_ν(b√(ξ² ± it²))",
          ("rho", "b", "xi", "s", "nu"),
          (_pos("rho"), _pos("b"), _pos("xi"), ("s > −1 (real)", lambda p: p["s"].imag == 0 and p["s"].real > -1)),
          _mkernel_lhs, _mkernel_rhs, _pts(dict(rho=1, b=1, xi=1, s=0.25, nu=0.5))),
        E("koshvor", "divisor sum of K₀(4π e^{±iπ/4}√(nβ)) against Σ d(n)/(β²+n²)",
          ("beta",), (_re_gt("beta", 0),),
          _koshvor_lhs, _koshvor_rhs, _pts(dict(beta=1))),
        E("vorram", "divisor sum of K₀(4π√(an)) against Σ d(n) log(a/n)/(a²−n²)",
          ("a",), (_re_gt("a", 0),),
          _vorram_lhs, _vorram_rhs, _pts(dict(a=1.5))),
        E("cohen", "σ_{−λ}(n) n^{λ/2} K_λ(4π√(na)) series with truncation index k",
          ("a", "lambda", "k"),
          (_re_gt("a", 0), ("λ not an integer", lambda p: abs(p["lambda"] - round(p["lambda"].real)) > 1e-9),
           ("k in {1, 2}", lambda p: p["k"] in (1, 2)),
           ("Re(λ) < 2k + 1", lambda p: p["lambda"].real < 2 * p["k"].real + 1)),
          _cohen_lhs, _cohen_rhs, _pts(dict(a=1.5, **{"lambda": 0.25}, k=1), dict(a=1.5, **{"lambda": 0.25}, k=2)),
          optional=True),
        E("dixmol", "σ_{−λ}(n) n^{λ/2} K_λ(4π e^{±iπ/4}√(nβ)) against Σ σ_{−λ}(n)/(n²+β²)",
          ("beta", "lambda"), (_re_gt("beta", 0), _re_gt("lambda", -1)),
          _dixmol_lhs, _dixmol_rhs,
          _pts(*(dict(beta=1, **{"lambda": l}) for l in (-0.5, 0, 1)))),
        E("thm-fock-analogue", "F_s-kernel integral of A(s,λ,z,w,±t²) = product of I_λ K_λ at rotated arguments",
          ("rho", "z", "w", "s", "lambda"),
          (_pos("rho"), *_ZW, _re_gt("s", -1), _re_gt("lambda", -0.5, "Re(λ) > −1/2"),
           ("Re(s+λ) > −1", lambda p: (p["s"] + p["lambda"]).real > -1)),
          _tfa_lhs, _tfa_rhs, _pts(dict(rho=1, z=2, w=1, s=0.5, **{"lambda": 0.5}))),
        E("sonine-analogue", "F_λ-kernel analogue of Sonine's integral with (w² ± it²)^{−2λ−1}",
          ("rho", "w", "lambda"),
          (_pos("rho"), ("|arg w| < π/4", lambda p: abs(carg(p["w"])) < PI / 4 and p["w"] != 0),
           _re_gt("lambda", -0.5, "Re(λ) > −1/2")),
          _sonan_lhs, _sonan_rhs, _pts(dict(rho=1, w=1, **{"lambda": 0.25}))),
        E("thm-series-transform", "σ_s(n) I_λ K_λ series against the A-function series with h(s,λ)",
          ("alpha", "beta", "s", "lambda"),
          (*_ARGS_AB, _re_gt("lambda", 0),
           ("Re(s+λ) > 0 or s = −λ", lambda p: (p["s"] + p["lambda"]).real > 0 or abs(p["s"] + p["lambda"]) <= 1e-12),
           _NOT_NEAR_MINUS_ONE),
          _thm_lhs, _thm_rhs,
          _pts(dict(alpha=4, beta=1, s=1, **{"lambda": 1}), dict(alpha=4, beta=1, s=-0.5, **{"lambda": 0.5}),
               dict(alpha=4, beta=1, s=0.5, **{"lambda": 0.25}))),
        E("dixmolgen", "σ_s(n) e^{−2π√(2nβ)} cos(2π√(2nβ)) against Σ σ_s(n)((β+in)^{−s−3/2} + (β−in)^{−s−3/2})",
          ("beta", "s"), (_re_gt("beta", 0), _re_gt("s", -0.5, "Re(s) > −1/2")),
          _dixmolgen_lhs, _dixmolgen_rhs, _pts(*(dict(beta=1, s=v) for v in (0, 0.5, 1)))),
        E("hardy-analogue", "d(n) e^{−2π√(2nβ)} cos(2π√(2nβ)) against Σ d(n)((β+in)^{−3/2} + (β−in)^{−3/2})",
          ("beta",), (_re_gt("beta", 0),),
          _hardy_lhs, _hardy_rhs, _pts(dict(beta=1))),
        E("exotic", "σ_{−1}(n) I₁ K₁ series against Σ σ_{−1}(n) of the √(α±in), √(β±in) ratio",
          ("alpha", "beta"), _ARGS_AB,
          _exotic_lhs, _exotic_rhs, _pts(dict(alpha=4, beta=1))),
        E("thm-analytic-cont", "continuation of the σ_s(n) I_λ K_λ transformation to Re(λ) > −1",
          ("alpha", "beta", "lambda", "s"),
          (*_ARGS_AB, _re_gt("lambda", -1), ("λ != 0", lambda p: p["lambda"] != 0),
           ("Re(s+λ) > 0 or s = −λ", lambda p: (p["s"] + p["lambda"]).real > 0 or abs(p["s"] + p["lambda"]) <= 1e-12),
           _NOT_NEAR_MINUS_ONE),
          _thm_lhs, _thm_cont_rhs, _pts(dict(alpha=4, beta=1, s=1, **{"lambda": -0.25}))),
        E("ramanujan-corrected", "convergent form of the σ_s(n)(β ± in)^{−s−1/2} transformation",
          ("beta", "s"), (_re_gt("beta", 0), _re_gt("s", -0.5, "Re(s) > −1/2")),
          _ramcor_lhs, _ramcor_rhs, _pts(*(dict(beta=1, s=v) for v in (0, 0.5, 1)))),
        E("zeta-half-squared", "formula for ζ(1/2)² from d(n) series",
          ("beta",), (_re_gt("beta", 0),),
          _zhs_lhs, _zhs_rhs, _pts(dict(beta=1))),
        E("lambda-zero", "d(n) I₀ K₀ series against Σ d(n) / (√(α±in)√(β±in))",
          ("alpha", "beta"), _ARGS_AB,
          _lam0_lhs, _lam0_rhs, _pts(dict(alpha=4, beta=1))),
        E("sigma-plus-lambda", "σ_λ(n) n^{λ/2} K_λ(4π e^{±iπ/4}√(nβ)) against Σ σ_λ(n)(β ± in)^{−2λ−1}",
          ("beta", "lambda"),
          (_re_gt("beta", 0), ("Re(λ) > 0 or λ = 0", lambda p: p["lambda"].real > 0 or p["lambda"] == 0)),
          _spl_lhs, _spl_rhs, _pts(*(dict(beta=1, **{"lambda": l}) for l in (0.5, 1)))),
        E("kpair-integral", "F_s-kernel integral of K_ν(y√(w² ± it²)) pairs",
          ("y", "rho", "w", "s", "nu"),
          (_pos("y"), _pos("rho"), ("|arg w| < π/4", lambda p: abs(carg(p["w"])) < PI / 4 and p["w"] != 0),
           _re_gt("s", -1)),
          _kpair_lhs, _kpair_rhs, _pts(dict(y=1, rho=1, w=1, s=0.25, nu=0.5))),
        E("jexp-integral", "∫ J_ν(γx) e^{−α√(x²+β²)}/√(x²+β²) dx = I_{ν/2} K_{ν/2}",
          ("alpha", "beta", "gamma", "nu"),
          (_re_gt("alpha", 0), _re_gt("beta", 0), _pos("gamma"), _re_gt("nu", -1)),
          _jexp_lhs, _jexp_rhs, _pts(dict(alpha=1, beta=1, gamma=1, nu=0.5))),
        E("ilaplace", "Laplace transform of t^μ I_λ(t) at (2y+α+β)/(α−β)",
          ("mu", "lambda", "alpha", "beta", "y"),
          (("Re(μ+λ+1) > 0", lambda p: (p["mu"] + p["lambda"] + 1).real > 0),
           ("α > β > 0 (real)", lambda p: _is_pos_real(p["beta"]) and p["alpha"].imag == 0 and p["alpha"].real > p["beta"].real),
           _pos("y")),
          _ilaplace_lhs, _ilaplace_rhs, _pts(dict(mu=0.5, **{"lambda": 0.5}, alpha=4, beta=1, y=1))),
        E("ik-moment", "Mellin moment ∫ y^{a−1} I_ν(by) K_ν(cy) dy",
          ("a", "nu", "b", "c"),
          (("|Re(b)| < Re(c)", lambda p: abs(p["b"].real) < p["c"].real),
           ("|Re(ν)| < Re(a+ν)", lambda p: abs(p["nu"].real) < (p["a"] + p["nu"]).real)),
          _ikmom_lhs, _ikmom_rhs, _pts(dict(a=1.5, nu=0.5, b=0.5, c=1))),
        E("ramanujan-p336-divergent", "σ_s(n)((β−in)^{−s−1/2} − (β+in)^{−s−1/2}) series: left side diverges",
          ("beta", "s"), (_re_gt("beta", 0), ("0 < Re(s) < 1/2", lambda p: 0 < p["s"].real < 0.5)),
          _p336_lhs, _p336_rhs, _pts(dict(beta=1, s=0.25)), kind="divergence"),
    ]


REGISTRY: dict[str, IdentityEntry] = {e.id: e for e in _entries()}


def get_entry(identity_id: str) -> IdentityEntry:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(identity_id) from None


def list_ids(include_optional: bool = False) -> list[str]:
    return [k for k, e in REGISTRY.items() if include_optional or not e.optional]


# ----------------------------------------------------------------- verify


def _diffs(lhs: complex, rhs: complex):
    abs_diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_diff = abs_diff / scale if scale > 0 else 0.0
    return abs_diff, rel_diff, scale


def passes(abs_diff: float, rel_diff: float, scale: float, tol: float) -> bool:
    return rel_diff <= tol or abs_diff <= tol * max(1.0, scale)


_NAN_RESULT = EvalResult(complex(math.nan, math.nan), math.inf, 1)


def verify(identity_id: str, point: Mapping[str, complex] | None = None, tol: float = 1e-6) -> VerificationReport:
    """Evaluate both sides at ``point`` (missing parameters take defaults)."""
    entry = get_entry(identity_id)
    full = entry.complete(point)
    bad = entry.violated(full)
    if bad:
        raise DomainError(bad)
    start = time.perf_counter()
    failure = None
    try:
        left = entry.lhs(full)
        right = entry.rhs(full)
    except KoshlabError as exc:
        failure = f"{type(exc).__name__}: {exc}"
        wall = time.perf_counter() - start
        return VerificationReport(entry.id, full, _NAN_RESULT, _NAN_RESULT, math.inf, math.inf, tol, False,
                                  "error", wall, failure)
    wall = time.perf_counter() - start
    abs_diff, rel_diff, scale = _diffs(left.value, right.value)
    counters = {"lhs_evals": left.result.evals, "rhs_evals": right.result.evals}
    if entry.kind == "divergence":
        verdict = left.verdict
        ok = verdict == DIVERGED
    else:
        verdicts = {left.verdict, right.verdict}
        verdict = CONVERGED if verdicts == {CONVERGED} else (INCONCLUSIVE if INCONCLUSIVE in verdicts else left.verdict)
        ok = passes(abs_diff, rel_diff, scale, tol) and math.isfinite(abs_diff)
    return VerificationReport(entry.id, full, left.result, right.result, abs_diff, rel_diff, tol, ok, verdict,
                              wall, failure, counters)


def sweep(identity_id: str, grid, tol: float = 1e-6) -> list[VerificationReport]:
    """One report per grid point, in grid order; domain violations become failed reports."""
    get_entry(identity_id)
    out = []
    for point in grid:
        try:
            out.append(verify(identity_id, point, tol))
        except DomainError as exc:
            entry = REGISTRY[identity_id]
            full = entry.complete(point)
            out.append(VerificationReport(identity_id, full, _NAN_RESULT, _NAN_RESULT, math.inf, math.inf, tol,
                                          False, "domain", 0.0, str(exc)))
    return out
