"""Bessel functions of complex order and argument, and the M_s / F_s kernels.

Three evaluation regimes are used:

* power series (and the integer-order logarithmic series) for small |z|;
* integral representations on composite Gauss-Legendre or trapezoid meshes
  for moderate |z|, which avoid the cancellation the power series suffers;
* Hankel asymptotic expansions with optimal truncation for |z| > 20.

Every public function accepts ``method`` to force a regime, which is how the
regime-continuity checks compare evaluations on the same argument.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._accel import kernels
from .complexcore import (
    DBL_EPS,
    EvalResult,
    carg,
    cospi,
    cpow_principal,
    digamma,
    rgamma,
    sinpi,
)
from .errors import BranchError, ConvergenceError, DomainError, PoleError, UnsupportedRegionError

R_ASYMPTOTIC = 20.0
R_SERIES_JYI = 6.0
R_SERIES_K = 2.0
NEAR_INTEGER = 1e-6
INTEGER_TOL = 1e-9
_METHODS = (None, "auto", "series", "integral", "asymptotic")


@dataclass(frozen=True)
class BesselOrder:
    s: complex

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))

    @property
    def nearest(self) -> int:
        return int(round(self.s.real))

    @property
    def is_integer(self) -> bool:
        return abs(self.s.real - self.nearest) <= INTEGER_TOL and abs(self.s.imag) <= INTEGER_TOL

    @property
    def is_near_integer(self) -> bool:
        return (not self.is_integer) and abs(self.s - self.nearest) < NEAR_INTEGER


@dataclass(frozen=True)
class KernelEnvelope:
    """Bound |F_s(x)| <= coefficient * x**exponent for x >= valid_from."""

    regime: str
    bound: float
    valid_from: float
    coefficient: float
    exponent: float = -0.5

    def at(self, x: float) -> float:
        if x < self.valid_from:
            raise DomainError("x >= valid_from")
        return self.coefficient * x**self.exponent


def _order(s) -> BesselOrder:
    order = s if isinstance(s, BesselOrder) else BesselOrder(s)
    if order.s.real == 0 and order.s.imag != 0:
        # large-argument behaviour of imaginary orders is not covered by the regimes here
        raise UnsupportedRegionError("Re(s) != 0 or s = 0", f"pure imaginary order {order.s}")
    return order


def _arg(z) -> complex:
    z = complex(z)
    return complex(z.real + 0.0, z.imag + 0.0)


def _result(t) -> EvalResult:
    v, e, n = t
    return EvalResult(complex(v), float(e), max(1, int(n)))


# ---------------------------------------------------------------- power series


def _series_ji(nu: complex, z: complex, sign: int):
    """(z/2)^nu sum (sign z^2/4)^m / (m! Gamma(m+nu+1)); sign -1 gives J, +1 gives I."""
    o = BesselOrder(nu)
    if o.is_integer and o.nearest < 0:
        v, e, n = _series_ji(complex(-o.nearest), z, sign)
        if sign < 0 and o.nearest % 2:
            v = -v
        return v, e, n
    if o.is_integer:
        nu = complex(o.nearest)
    if z == 0:
        if nu == 0:
            return 1.0 + 0j, 0.0, 1
        if nu.real > 0:
            return 0j, 0.0, 1
        raise DomainError("z != 0 when Re(s) <= 0, s != 0")
    half = 0.5 * z
    pref = cpow_principal(half, nu) * rgamma(nu + 1.0)
    total, abs_total, n = kernels.bessel_series(nu, sign * half * half, 1e-17, 1000)
    value = pref * complex(total)
    err = abs(pref) * abs_total * 8 * DBL_EPS + abs(value) * (2e-15 + DBL_EPS * abs(nu * cmath.log(half)))
    return value, err, n


def _y_log_series(n: int, z: complex):
    # integer order Y_n, n >= 0, via the logarithmic series with digamma coefficients
    half = 0.5 * z
    q = -half * half
    j, jerr, cnt = _series_ji(complex(n), z, -1)
    lg = cmath.log(half)
    finite = 0j
    fabs = 0.0
    if n:
        for k in range(n):
            t = math.factorial(n - k - 1) / math.factorial(k) * half ** (2 * k - n)
            finite += t
            fabs += abs(t)
    psi_a = digamma(1.0)
    psi_b = digamma(n + 1.0)
    term = 1.0 / math.factorial(n) + 0j
    acc = 0j
    acc_abs = 0.0
    k = 0
    while True:
        t = (psi_a + psi_b) * term
        acc += t
        acc_abs += abs(t)
        if k > 4 and abs(t) < 1e-17 * abs(acc):
            break
        k += 1
        if k > 600:
            raise ConvergenceError("Y log-series did not converge")
        term = term * q / (k * (n + k))
        psi_a += 1.0 / k
        psi_b += 1.0 / (n + k)
    hn = half**n
    value = (2.0 / math.pi) * j * lg - finite / math.pi - hn * acc / math.pi
    err = (2.0 / math.pi) * (jerr * abs(lg) + abs(j) * DBL_EPS * 4) + 8 * DBL_EPS * (fabs + abs(hn) * acc_abs)
    return value, err, cnt + k + n


def _k_log_series(n: int, z: complex):
    half = 0.5 * z
    q = half * half
    i_val, ierr, cnt = _series_ji(complex(n), z, 1)
    lg = cmath.log(half)
    finite = 0j
    fabs = 0.0
    for k in range(n):
        t = (-1) ** k * math.factorial(n - k - 1) / math.factorial(k) * half ** (2 * k - n)
        finite += t
        fabs += abs(t)
    psi_a = digamma(1.0)
    psi_b = digamma(n + 1.0)
    term = 1.0 / math.factorial(n) + 0j
    acc = 0j
    acc_abs = 0.0
    k = 0
    while True:
        t = (psi_a + psi_b) * term
        acc += t
        acc_abs += abs(t)
        if k > 4 and abs(t) < 1e-17 * abs(acc):
            break
        k += 1
        if k > 600:
            raise ConvergenceError("K log-series did not converge")
        term = term * q / (k * (n + k))
        psi_a += 1.0 / k
        psi_b += 1.0 / (n + k)
    hn = half**n
    sgn = -1.0 if n % 2 else 1.0
    value = -sgn * lg * i_val + 0.5 * finite + sgn * 0.5 * hn * acc
    err = ierr * abs(lg) + 8 * DBL_EPS * (abs(i_val * lg) + fabs + abs(hn) * acc_abs)
    return value, err, cnt + k + n


def _y_series_generic(nu: complex, z: complex):
    jp, ep, n1 = _series_ji(nu, z, -1)
    jm, em, n2 = _series_ji(-nu, z, -1)
    c, s = cospi(nu), sinpi(nu)
    value = (jp * c - jm) / s
    err = (ep * abs(c) + em + 4 * DBL_EPS * (abs(jp * c) + abs(jm))) / abs(s)
    return value, err, n1 + n2


def _k_series_generic(nu: complex, z: complex):
    ip, ep, n1 = _series_ji(nu, z, 1)
    im, em, n2 = _series_ji(-nu, z, 1)
    s = sinpi(nu)
    value = 0.5 * math.pi * (im - ip) / s
    err = 0.5 * math.pi * (ep + em + 4 * DBL_EPS * (abs(ip) + abs(im))) / abs(s)
    return value, err, n1 + n2


def _order_derivative(fn, n: int, z: complex):
    """d/dnu at an integer order by Richardson-extrapolated central differences."""
    h = 1e-3
    total = 0
    diffs = []
    errs = []
    for step in (h, 2 * h):
        up, eu, c1 = fn(n + step, z)
        dn, ed, c2 = fn(n - step, z)
        diffs.append((up - dn) / (2 * step))
        errs.append((eu + ed) / (2 * step))
        total += c1 + c2
    deriv = (4 * diffs[0] - diffs[1]) / 3
    err = abs(diffs[0] - diffs[1]) / 3 + 2 * errs[0] + 1e-12 * abs(deriv)
    return deriv, err, total


def _y_series(o: BesselOrder, z: complex):
    if z == 0:
        raise PoleError(0, "z != 0")
    if o.is_integer:
        n = o.nearest
        v, e, c = _y_log_series(abs(n), z)
        if n < 0 and n % 2:
            v = -v
        return v, e, c
    if o.is_near_integer:
        # integer-order value plus a first-order correction from a central
        # difference taken far enough from the integer to avoid cancellation
        n = o.nearest
        base, berr, c0 = _y_log_series(abs(n), z)
        if n < 0 and n % 2:
            base = -base
        deriv, derr, c1 = _order_derivative(_y_series_generic, n, z)
        delta = o.s - n
        return base + delta * deriv, berr + abs(delta) * derr, c0 + c1
    return _y_series_generic(o.s, z)


def _k_series(o: BesselOrder, z: complex):
    if z == 0:
        raise PoleError(0, "z != 0")
    if o.is_integer:
        return _k_log_series(abs(o.nearest), z)
    if o.is_near_integer:
        n = o.nearest
        base, berr, c0 = _k_log_series(abs(n), z)
        deriv, derr, c1 = _order_derivative(_k_series_generic, n, z)
        delta = o.s - n
        return base + delta * deriv, berr + abs(delta) * derr, c0 + c1
    return _k_series_generic(o.s, z)


# ---------------------------------------------------------- integral regime

_GL_N = 16


@lru_cache(maxsize=None)
def _gl(n: int = _GL_N):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _mesh(edges):
    x, w = _gl()
    a = np.asarray(edges[:-1], dtype=float)
    b = np.asarray(edges[1:], dtype=float)
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


@lru_cache(maxsize=256)
def _theta_mesh(panels: int):
    return _mesh(np.linspace(0.0, math.pi, panels + 1))


def _theta_panels(nu: complex, z: complex) -> int:
    return max(2, int(math.ceil((abs(z) + abs(nu)) / 4.0)))


def _panel_edges(width_at, stop_at, start=0.0, max_panels=400):
    edges = [start]
    a = start
    while a < stop_at and len(edges) <= max_panels:
        a = min(a + width_at(a), stop_at)
        edges.append(a)
    return edges


def _v_mesh(nu: complex, z: complex):
    # mesh on [0, V] for integrands exp(-z v) g(v), g smooth with singularities at +-i
    rz = z.real
    anu = abs(nu.real)
    # solve rz*V - anu*asinh(V) = 45 roughly
    v_stop = 45.0 / rz
    for _ in range(30):
        v_stop = (45.0 + anu * math.asinh(v_stop)) / rz
    scale = abs(z) + abs(nu)

    def width(a):
        return min(max(0.5, 0.5 * a), 8.0 / scale)

    return _mesh(_panel_edges(width, v_stop))


def _x_mesh(nu: complex, z: complex):
    # mesh on [0, X] for exp(-z x^2) g(x)
    rz = z.real
    anu = abs(nu.real)
    x_stop = math.sqrt(42.0 / rz)
    for _ in range(30):
        x_stop = math.sqrt((42.0 + 2 * anu * math.asinh(x_stop / math.sqrt(2.0))) / rz)

    def width(a):
        return min(max(0.5, 0.5 * a), 6.0 / (2 * abs(z) * a + abs(nu) + 1.0))

    return _mesh(_panel_edges(width, x_stop))


def _jy_integral(nu: complex, z: complex):
    """J_nu(z) and Y_nu(z) for Re z > 0 from the Schlafli-type integrals."""
    th, tw = _theta_mesh(_theta_panels(nu, z))
    w = nu * th - z * np.sin(th)
    c = np.cos(w)
    s = np.sin(w)
    j1 = np.dot(tw, c) / math.pi
    y1 = -np.dot(tw, s) / math.pi
    mag1 = np.dot(tw, np.abs(c) + np.abs(s)) / math.pi
    v, vw = _v_mesh(nu, z)
    ash = np.arcsinh(v)
    base = np.exp(-z * v) / np.sqrt(1.0 + v * v)
    ep = np.exp(nu * ash)
    em = np.exp(-nu * ash)
    sp, cp = sinpi(nu), cospi(nu)
    j2 = -sp / math.pi * np.dot(vw, em * base)
    y2 = -np.dot(vw, (ep + em * cp) * base) / math.pi
    mag2 = np.dot(vw, (np.abs(ep) + np.abs(em)) * np.abs(base)) / math.pi * (1 + abs(sp) + abs(cp))
    err = 32 * DBL_EPS * (mag1 + mag2)
    n = th.size + v.size
    return complex(j1 + j2), complex(y1 + y2), err, n


def _i_integral(nu: complex, z: complex):
    th, tw = _theta_mesh(_theta_panels(nu, z))
    # factor e^{Re z} out of the first integral for range safety
    shift = z.real
    f = np.exp(z * np.cos(th) - shift) * np.cos(nu * th)
    i1 = np.dot(tw, f) / math.pi
    mag = np.dot(tw, np.abs(f)) / math.pi
    x, xw = _x_mesh(nu, z)
    g = np.exp(-z * x * x - 2.0 * nu * np.arcsinh(x / math.sqrt(2.0))) * 2.0 / np.sqrt(2.0 + x * x)
    i2 = -sinpi(nu) / math.pi * cmath.exp(-z - shift) * np.dot(xw, g)
    scale = math.exp(shift)
    value = (complex(i1) + complex(i2)) * scale
    err = 32 * DBL_EPS * (mag + abs(i2)) * scale
    return value, err, th.size + x.size


def _k_trapezoid(nu: complex, z: complex):
    """K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt by the trapezoid rule."""
    phi = abs(carg(z))
    d = 0.8 * (0.5 * math.pi - phi)
    if d <= 0.05:
        raise DomainError("|arg z| < pi/2 for the trapezoid representation")
    az = abs(z)
    penalty = az * (math.cos(phi) - math.cos(phi + d)) + abs(nu) * d
    h = 2 * math.pi * d / (40.0 + penalty)
    rz = z.real
    anu = abs(nu.real)
    t_stop = 1.0
    for _ in range(40):
        t_stop = math.acosh(1.0 + (42.0 + anu * t_stop) / rz)
    n = int(math.ceil(t_stop / h)) + 1
    t = np.arange(n) * h
    f = np.exp(-z * (np.cosh(t) - 1.0)) * np.cosh(nu * t)
    f[0] *= 0.5
    total = h * f.sum()
    mag = h * np.abs(f).sum()
    ez = cmath.exp(-z)
    value = complex(total) * ez
    err = 16 * DBL_EPS * mag * abs(ez) * math.sqrt(n)
    return value, err, n


# ----------------------------------------------------------- asymptotic regime


def _asym_terms(nu: complex, z: complex):
    """Terms a_k(nu)/z^k up to optimal truncation, plus the first omitted one."""
    mu = 4.0 * nu * nu
    terms = [1.0 + 0j]
    u = 1.0 + 0j
    omitted = 0.0
    for k in range(1, 80):
        u = u * (mu - (2 * k - 1) ** 2) / (8.0 * k * z)
        au = abs(u)
        if au == 0.0:
            omitted = 0.0
            break
        if au > abs(terms[-1]):
            omitted = au
            break
        terms.append(u)
        if au < 1e-18:
            omitted = au
            break
    else:
        raise ConvergenceError("asymptotic expansion did not reach a minimal term")
    return terms, omitted


def _jy_asymptotic(nu: complex, z: complex):
    terms, omitted = _asym_terms(nu, z)
    p = 0j
    q = 0j
    for k, t in enumerate(terms):
        if k % 2 == 0:
            p += t if (k // 2) % 2 == 0 else -t
        else:
            q += t if ((k - 1) // 2) % 2 == 0 else -t
    omega = z - 0.5 * math.pi * nu - 0.25 * math.pi
    amp = cmath.sqrt(2.0 / (math.pi * z))
    c, s = cmath.cos(omega), cmath.sin(omega)
    j = amp * (p * c - q * s)
    y = amp * (p * s + q * c)
    scale = abs(amp) * (abs(c) + abs(s))
    err = scale * (2 * omitted + 8 * DBL_EPS * len(terms)) + 4 * DBL_EPS * abs(omega) * scale
    return j, y, err, len(terms)


def _k_asymptotic(nu: complex, z: complex):
    terms, omitted = _asym_terms(nu, z)
    total = sum(terms)
    pref = cmath.sqrt(math.pi / (2.0 * z)) * cmath.exp(-z)
    value = pref * total
    err = abs(pref) * (2 * omitted + 8 * DBL_EPS * len(terms))
    return value, err, len(terms)


def _i_asymptotic(nu: complex, z: complex):
    terms, omitted = _asym_terms(nu, z)
    alt = sum(t if k % 2 == 0 else -t for k, t in enumerate(terms))
    plain = sum(terms)
    root = cmath.sqrt(2.0 * math.pi * z)
    dom = cmath.exp(z) / root
    value = dom * alt
    err = abs(dom) * (2 * omitted + 8 * DBL_EPS * len(terms))
    if not (z.imag == 0.0 and z.real > 0):
        sgn = 1.0 if z.imag >= 0 else -1.0
        sub = sgn * 1j * cmath.exp(sgn * 1j * math.pi * nu) * cmath.exp(-z) / root
        value += sub * plain
        err += abs(sub) * (2 * omitted + 8 * DBL_EPS * len(terms))
    return value, err, len(terms)


# ------------------------------------------------------------------ dispatch

_NEAR_REAL = math.pi / 3


def _side(z: complex) -> float:
    return 1.0 if z.imag >= 0 else -1.0


def _check_method(method):
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    return None if method == "auto" else method


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real < 0.0


def _regime(z: complex, r_series: float, method) -> str:
    if method:
        return method
    a = abs(z)
    if a <= r_series:
        return "series"
    if a > R_ASYMPTOTIC:
        return "asymptotic"
    return "integral"


def _j_mid(nu: complex, z: complex):
    if z.real < 0:
        sgn = 1.0 if z.imag >= 0 else -1.0
        v, e, n = _j_mid(nu, -z)
        f = cmath.exp(sgn * 1j * math.pi * nu)
        return f * v, abs(f) * e, n
    if abs(carg(z)) > _NEAR_REAL:
        sgn = 1.0 if z.imag >= 0 else -1.0
        v, e, n = _i_mid(nu, -sgn * 1j * z)
        f = cmath.exp(sgn * 0.5j * math.pi * nu)
        return f * v, abs(f) * e, n
    j, _, e, n = _jy_integral(nu, z)
    return j, e, n


def _i_mid(nu: complex, z: complex):
    if z.real < 0:
        sgn = 1.0 if z.imag >= 0 else -1.0
        v, e, n = _i_mid(nu, -z)
        f = cmath.exp(sgn * 1j * math.pi * nu)
        return f * v, abs(f) * e, n
    if abs(carg(z)) > _NEAR_REAL:
        sgn = 1.0 if z.imag >= 0 else -1.0
        v, e, n = _j_mid(nu, -sgn * 1j * z)
        f = cmath.exp(sgn * 0.5j * math.pi * nu)
        return f * v, abs(f) * e, n
    return _i_integral(nu, z)


def _y_mid(nu: complex, z: complex):
    if z.real < 0:
        sgn = 1.0 if z.imag >= 0 else -1.0
        w = -z
        y, ey, n1 = _y_mid(nu, w)
        j, ej, n2 = _j_mid(nu, w)
        f = cmath.exp(-sgn * 1j * math.pi * nu)
        g = sgn * 2j * cospi(nu)
        return f * y + g * j, abs(f) * ey + abs(g) * ej, n1 + n2
    if abs(carg(z)) > _NEAR_REAL:
        j, ej, n1 = _j_mid(nu, z)
        if z.imag >= 0:
            k, ek, n2 = _k_mid(nu, -1j * z)
            f = 2.0 / (1j * math.pi) * cmath.exp(-0.5j * math.pi * nu)
            h1 = f * k
            return (h1 - j) / 1j, abs(f) * ek + ej, n1 + n2
        k, ek, n2 = _k_mid(nu, 1j * z)
        f = -2.0 / (1j * math.pi) * cmath.exp(0.5j * math.pi * nu)
        h2 = f * k
        return (j - h2) / 1j, abs(f) * ek + ej, n1 + n2
    _, y, e, n = _jy_integral(nu, z)
    return y, e, n


def _k_mid(nu: complex, z: complex):
    if z.real < 0:
        sgn = 1.0 if z.imag >= 0 else -1.0
        w = -z
        k, ek, n1 = _k_mid(nu, w)
        i, ei, n2 = _i_mid(nu, w)
        f = cmath.exp(-sgn * 1j * math.pi * nu)
        g = -sgn * 1j * math.pi
        return f * k + g * i, abs(f) * ek + math.pi * ei, n1 + n2
    if abs(carg(z)) > _NEAR_REAL:
        if z.imag >= 0:
            w = -1j * z
            j, y, e, n = _jy_any(nu, w)
            f = -0.5j * math.pi * cmath.exp(-0.5j * math.pi * nu)
            return f * (j - 1j * y), abs(f) * e, n
        w = 1j * z
        j, y, e, n = _jy_any(nu, w)
        f = 0.5j * math.pi * cmath.exp(0.5j * math.pi * nu)
        return f * (j + 1j * y), abs(f) * e, n
    return _k_trapezoid(nu, z)


def _jy_any(nu: complex, z: complex):
    # J and Y together at a near-real argument in any regime
    a = abs(z)
    if a > R_ASYMPTOTIC:
        return _jy_asymptotic(nu, z)
    if a <= R_SERIES_JYI:
        o = BesselOrder(nu)
        j, ej, n1 = _series_ji(nu, z, -1)
        y, ey, n2 = _y_series(o, z)
        return j, y, ej + ey, n1 + n2
    return _jy_integral(nu, z)


def _j_eval(o: BesselOrder, z: complex, method):
    nu = complex(o.nearest) if o.is_integer else o.s
    if _on_cut(z) and not o.is_integer:
        raise BranchError("|arg z| < pi", "argument on the branch cut")
    if o.is_integer and o.nearest < 0:
        v, e, n = _j_eval(BesselOrder(-o.nearest), z, method)
        return (-v if o.nearest % 2 else v), e, n
    if _on_cut(z):
        v, e, n = _j_eval(o, -z, method)
        return (-v if o.nearest % 2 else v), e, n
    reg = _regime(z, R_SERIES_JYI, method)
    if reg == "series" or z == 0:
        return _series_ji(nu, z, -1)
    if z.real < 0:
        v, e, n = _j_eval(o, -z, method)
        f = cmath.exp(_side(z) * 1j * math.pi * nu)
        return f * v, abs(f) * e, n
    if reg == "asymptotic":
        j, _, e, n = _jy_asymptotic(nu, z)
        return j, e, n
    return _j_mid(nu, z)


def _y_eval(o: BesselOrder, z: complex, method):
    if z == 0:
        raise PoleError(0, "z != 0")
    if _on_cut(z):
        raise BranchError("|arg z| < pi", "argument on the branch cut")
    nu = complex(o.nearest) if o.is_integer else o.s
    reg = _regime(z, R_SERIES_JYI, method)
    if reg == "series":
        return _y_series(o, z)
    if z.real < 0:
        sgn = _side(z)
        y, ey, n1 = _y_eval(o, -z, method)
        j, ej, n2 = _j_eval(o, -z, method)
        f = cmath.exp(-sgn * 1j * math.pi * nu)
        g = sgn * 2j * cospi(nu)
        return f * y + g * j, abs(f) * ey + abs(g) * ej, n1 + n2
    if reg == "asymptotic":
        _, y, e, n = _jy_asymptotic(nu, z)
        return y, e, n
    return _y_mid(nu, z)


def _i_eval(o: BesselOrder, z: complex, method):
    nu = complex(o.nearest) if o.is_integer else o.s
    if _on_cut(z) and not o.is_integer:
        raise BranchError("|arg z| < pi", "argument on the branch cut")
    if o.is_integer and o.nearest < 0:
        return _i_eval(BesselOrder(-o.nearest), z, method)
    if _on_cut(z):
        v, e, n = _i_eval(o, -z, method)
        return (-v if o.nearest % 2 else v), e, n
    reg = _regime(z, R_SERIES_JYI, method)
    if reg == "series" or z == 0:
        return _series_ji(nu, z, 1)
    if z.real < 0:
        v, e, n = _i_eval(o, -z, method)
        f = cmath.exp(_side(z) * 1j * math.pi * nu)
        return f * v, abs(f) * e, n
    if reg == "asymptotic":
        return _i_asymptotic(nu, z)
    return _i_mid(nu, z)


def _k_eval(o: BesselOrder, z: complex, method):
    if z == 0:
        raise PoleError(0, "z != 0")
    if _on_cut(z):
        raise BranchError("|arg z| < pi", "argument on the branch cut")
    nu = complex(o.nearest) if o.is_integer else o.s
    if nu.real < 0 or (nu.real == 0 and nu.imag < 0):
        nu = -nu
        o = BesselOrder(nu)
    reg = _regime(z, R_SERIES_K, method)
    if reg == "series":
        return _k_series(o, z)
    if z.real < 0:
        sgn = _side(z)
        k, ek, n1 = _k_eval(o, -z, method)
        i, ei, n2 = _i_eval(o, -z, method)
        f = cmath.exp(-sgn * 1j * math.pi * nu)
        g = -sgn * 1j * math.pi
        return f * k + g * i, abs(f) * ek + math.pi * ei, n1 + n2
    if reg == "asymptotic":
        return _k_asymptotic(nu, z)
    return _k_mid(nu, z)


# -------------------------------------------------------------------- public


def bessel_j(s, z, method: str | None = None) -> EvalResult:
    """Bessel function of the first kind J_s(z)."""
    return _result(_j_eval(_order(s), _arg(z), _check_method(method)))


def bessel_y(s, z, method: str | None = None) -> EvalResult:
    """Bessel function of the second kind Y_s(z)."""
    return _result(_y_eval(_order(s), _arg(z), _check_method(method)))


def bessel_i(s, z, method: str | None = None) -> EvalResult:
    """Modified Bessel function of the first kind I_s(z)."""
    return _result(_i_eval(_order(s), _arg(z), _check_method(method)))


def bessel_k(s, z, method: str | None = None) -> EvalResult:
    """Modified Bessel function of the second kind K_s(z); even in s."""
    return _result(_k_eval(_order(s), _arg(z), _check_method(method)))


def _real_positive(x) -> float:
    if isinstance(x, complex):
        if x.imag != 0:
            raise DomainError("x > 0 (real)")
        x = x.real
    x = float(x)
    if not x > 0:
        raise DomainError("x > 0")
    return x


def _jyk_real(o: BesselOrder, x: float):
    z = complex(x)
    nu = complex(o.nearest) if o.is_integer else o.s
    if x > R_ASYMPTOTIC:
        j, y, ejy, n1 = _jy_asymptotic(nu, z)
        ej = ey = ejy
    elif x <= R_SERIES_JYI:
        j, ej, n1a = _j_eval(o, z, None)
        y, ey, n1b = _y_eval(o, z, None)
        n1 = n1a + n1b
    else:
        j, y, ejy, n1 = _jy_integral(nu, z)
        ej = ey = ejy
    k, ek, n2 = _k_eval(o, z, None)
    return j, ej, y, ey, k, ek, n1 + n2


def m_kernel(s, x) -> EvalResult:
    """M_s(x) = (2/pi) K_s(x) - Y_s(x) for real x > 0."""
    o = _order(s)
    x = _real_positive(x)
    _, _, y, ey, k, ek, n = _jyk_real(o, x)
    v = 2.0 / math.pi * k - y
    return EvalResult(v, 2.0 / math.pi * ek + ey + DBL_EPS * (abs(k) + abs(y)), n)


def koshliakov_kernel(s, x) -> EvalResult:
    """F_s(x) = M_s(x) cos(pi s/2) - J_s(x) sin(pi s/2) for real x > 0."""
    o = _order(s)
    x = _real_positive(x)
    j, ej, y, ey, k, ek, n = _jyk_real(o, x)
    c, sn = cospi(0.5 * o.s), sinpi(0.5 * o.s)
    m = 2.0 / math.pi * k - y
    v = m * c - j * sn
    err = (2.0 / math.pi * ek + ey) * abs(c) + ej * abs(sn) + 4 * DBL_EPS * (abs(m * c) + abs(j * sn))
    return EvalResult(v, err, n)


def kernel_envelope(s, start: float) -> KernelEnvelope:
    """Envelope C x^{-1/2} for |F_s(x)| on [max(start, 1), inf).

    C is the largest sampled value of |F_s(x)| sqrt(x) on a window past the
    start point (never below the asymptotic amplitude sqrt(2/pi)), doubled as
    a safety margin.
    """
    if not start > 0:
        raise DomainError("from > 0")
    o = _order(s)
    x0 = max(float(start), 1.0)
    xs = np.linspace(x0, x0 + 60.0, 241)
    peak = max(abs(koshliakov_kernel(o, float(x)).value) * math.sqrt(x) for x in xs)
    c = 2.0 * max(peak, math.sqrt(2.0 / math.pi))
    if x0 < 1.0:
        regime = "small-argument"
    elif x0 <= R_ASYMPTOTIC:
        regime = "transition"
    else:
        regime = "asymptotic"
    return KernelEnvelope(regime, c / math.sqrt(x0), x0, c)
