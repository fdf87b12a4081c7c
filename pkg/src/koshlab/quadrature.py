"""Adaptive Gauss-Kronrod quadrature on finite and semi-infinite ranges.

Semi-infinite integrals come in two kinds.  Exponentially decaying
integrands are cut at a point T past which an envelope bounds the remainder.
Algebraically decaying oscillatory integrands (Bessel kernels against slowly
varying weights) are split into lobes of one half-period each; the partial
sums of the lobe series are accelerated by repeated averaging, which is the
Euler transformation for an alternating sequence.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .complexcore import DBL_EPS
from .errors import ConvergenceError, DomainError

SUBINTERVAL_CAP = 2**16
MAX_LOBES = 64
EULER_LEVELS = 24
T_CAP = 1e4

# 15-point Kronrod nodes with the embedded 7-point Gauss rule
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG15 = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod nodes (0.9491, 0.7415, 0.4058, 0)
for i, w in zip((1, 3, 5), _WG[:3]):
    _WG15[i] = w
    _WG15[14 - i] = w
_WG15[7] = _WG[3]


@dataclass(frozen=True)
class Exponential:
    """|f(t)| decays like exp(-rate t); ``bound(t)`` optionally bounds |f| pointwise for large t."""

    rate: float
    bound: Callable[[float], float] | None = None


@dataclass(frozen=True)
class Algebraic:
    """|f(t)| decays like t^{-exponent}, usually with oscillation."""

    exponent: float


DecayHint = Union[Exponential, Algebraic]


@dataclass(frozen=True)
class Integrand:
    eval: Callable[[float], complex]
    decay_hint: DecayHint | None = None
    oscillation_hint: float | None = None
    # zeros of the oscillating factor sit near offset + k * oscillation_hint
    offset: float = 0.0


@dataclass(frozen=True)
class QuadResult:
    value: complex
    abs_err: float
    tail_bound: float = 0.0
    subintervals: int = 1
    evals: int = 0


def _as_callable(f) -> Callable[[float], complex]:
    return f.eval if isinstance(f, Integrand) else f


def _gk15(func, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    vals = np.array([complex(func(mid + half * x)) for x in _NODES])
    k = half * np.dot(_WK, vals)
    g = half * np.dot(_WG15, vals)
    absk = abs(half) * np.dot(_WK, np.abs(vals))
    if not np.all(np.isfinite(vals)):
        raise DomainError("integrand finite on the open interval", f"non-finite value on [{a}, {b}]")
    err = abs(k - g)
    # intervals already at rounding level cannot improve by bisection
    floor = 50 * DBL_EPS * absk
    return complex(k), max(err, floor), floor


def integrate_finite(
    f,
    a: float,
    b: float,
    tol: float,
    cap: int = SUBINTERVAL_CAP,
    breakpoints: list[float] | None = None,
    grade: bool | None = None,
) -> QuadResult:
    """Adaptive G7-K15 with global bisection of the worst interval.

    When ``a`` is 0 the initial mesh is graded geometrically toward it, which
    tames integrable endpoint behaviour t^sigma, sigma > -1.
    """
    if not (0 <= a < b < math.inf):
        raise DomainError("0 <= a < b < inf")
    if not tol > 0:
        raise DomainError("tol > 0")
    func = _as_callable(f)
    edges = {a, b}
    if breakpoints:
        edges.update(x for x in breakpoints if a < x < b)
    if grade if grade is not None else a == 0.0:
        first = min(edges - {a})
        for k in range(1, 13):
            edges.add(a + (first - a) * 4.0 ** (-k))
    edges = sorted(edges)
    heap = []
    total = 0j
    total_err = 0.0
    stuck = 0.0
    evals = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e, fl = _gk15(func, lo, hi)
        evals += 15
        heapq.heappush(heap, (-e, lo, hi, v, fl))
        total += v
        total_err += e
    count = len(heap)
    while total_err - stuck > tol and heap:
        neg_e, lo, hi, v, fl = heapq.heappop(heap)
        e = -neg_e
        if e <= fl * 1.0000001 or hi - lo <= 8 * DBL_EPS * max(abs(lo), abs(hi)) or hi - lo < 1e-280:
            # rounding-limited; keep it aside
            stuck += e
            heapq.heappush(heap, (0.0, lo, hi, v, fl))
            if all(-h[0] == 0.0 for h in heap):
                break
            continue
        if count + 1 > cap:
            raise ConvergenceError(f"subdivision cap {cap} exceeded", best=total)
        mid = 0.5 * (lo + hi)
        v1, e1, f1 = _gk15(func, lo, mid)
        v2, e2, f2 = _gk15(func, mid, hi)
        evals += 30
        total += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, lo, mid, v1, f1))
        heapq.heappush(heap, (-e2, mid, hi, v2, f2))
        count += 1
    values = [h[3] for h in heap]
    total = complex(math.fsum(x.real for x in values), math.fsum(x.imag for x in values))
    err = math.fsum(max(-h[0], h[4]) for h in heap) + stuck
    return QuadResult(total, err, 0.0, count, evals)


def _exp_cutoff(func, hint: Exponential, tol: float):
    rate = hint.rate
    if not rate > 0:
        raise DomainError("decay rate > 0")
    if hint.bound is not None:
        bound = hint.bound
        t = 1.0
        while bound(t) / rate > 0.25 * tol and t < T_CAP:
            t *= 1.25
        return min(t, T_CAP), bound(min(t, T_CAP)) / rate
    # fit C in |f(t)| <= C exp(-rate t) on a window, refit past the first cut
    start = 1.0 / rate
    t_cut = start
    amp = 0.0
    for _ in range(3):
        ts = np.linspace(t_cut, t_cut + 6.0 / rate, 25)
        amp = max(amp, 2.0 * max(abs(complex(func(float(x)))) * math.exp(rate * x) for x in ts))
        if amp == 0.0:
            return t_cut, 0.0
        new_cut = max(start, math.log(4.0 * amp / (rate * tol)) / rate)
        if new_cut <= t_cut * 1.01:
            break
        t_cut = min(new_cut, T_CAP)
    return t_cut, amp * math.exp(-rate * t_cut) / rate


def integrate_semi_infinite(f: Integrand, tol: float) -> QuadResult:
    """Integral over (0, inf) driven by the integrand's decay and oscillation hints."""
    if not tol > 0:
        raise DomainError("tol > 0")
    if f.decay_hint is None:
        raise DomainError("decay_hint present")
    func = f.eval
    hint = f.decay_hint
    period = f.oscillation_hint
    if isinstance(hint, Exponential):
        t_cut, tail = _exp_cutoff(func, hint, tol)
        bps = None
        if period:
            n = int(t_cut / period)
            bps = [f.offset + k * period for k in range(n + 1)] if n <= 4096 else None
        body = integrate_finite(func, 0.0, t_cut, 0.75 * tol, breakpoints=bps)
        return QuadResult(body.value, body.abs_err + tail, tail, body.subintervals, body.evals)
    if not period:
        raise DomainError("oscillation_hint present for algebraic decay")
    return _lobe_integral(func, period, f.offset, tol)


def _lobe_integral(func, period: float, offset: float, tol: float) -> QuadResult:
    first = period / math.pi
    k0 = max(0, math.ceil((first - offset) / period))
    start = max(first, offset + k0 * period)
    head = integrate_finite(func, 0.0, start, 0.25 * tol)
    subs = head.subintervals
    evals = head.evals
    lobe_tol = tol / (4 * MAX_LOBES)
    partial = head.value
    sums = [partial]
    accel: list[complex] = []
    lobe_err = 0.0
    lo = start
    for n in range(MAX_LOBES):
        hi = lo + period
        r = integrate_finite(func, lo, hi, lobe_tol, grade=False)
        subs += r.subintervals
        evals += r.evals
        lobe_err += r.abs_err
        partial += r.value
        sums.append(partial)
        lo = hi
        accel.append(_euler_accelerate(sums))
        if len(accel) >= 6:
            d1 = abs(accel[-1] - accel[-2])
            d2 = abs(accel[-2] - accel[-3])
            if max(d1, d2) < tol / 8:
                tail = 2.0 * max(d1, d2)
                err = head.abs_err + lobe_err + tail
                return QuadResult(accel[-1], err, tail, subs, evals)
    raise ConvergenceError(
        f"lobe series did not settle after {MAX_LOBES} lobes", best=accel[-1] if accel else partial
    )


def _euler_accelerate(sums: list[complex]) -> complex:
    # repeated pairwise averaging of the trailing partial sums
    depth = min(EULER_LEVELS, len(sums) - 1)
    row = list(sums[-(depth + 1):])
    for _ in range(depth):
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
    return row[-1]
