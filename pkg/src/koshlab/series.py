"""Divisor sums and summation of infinite series with certified tails.

Series whose terms carry sigma_s(n) and decay algebraically are summed as a
direct partial sum plus an exact Dirichlet-series tail: when the summand has a
convergent expansion sum_k c_k n^{-p-k} (log n)^j for large n, each
sum_{n>M} sigma_s(n) n^{-p-k} (log n)^j is a zeta product minus a finite sum.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from ._accel import kernels
from .complexcore import DBL_EPS, cauchy_derivative, zeta
from .errors import CacheMissError, DomainError

CONVERGED = "converged"
DIVERGED = "diverged"
INCONCLUSIVE = "inconclusive"

DEFAULT_SIEVE_LIMIT = 10**6
DEFAULT_N_DIRECT = 10**4
MAX_N_DIRECT = 10**6

Term = Callable[[int], complex]


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    abs_err: float
    terms_used: int
    verdict: str


class SigmaCache:
    """Smallest-prime-factor table for 1..limit, plus cached sigma_s tables."""

    def __init__(self, limit: int = DEFAULT_SIEVE_LIMIT):
        if limit < 1:
            raise ValueError("limit must be positive")
        self.limit = int(limit)
        self.spf = kernels.spf_sieve(self.limit)
        self._tables: dict[complex, np.ndarray] = {}

    def _check(self, n: int):
        if n > self.limit:
            raise CacheMissError(f"n = {n} exceeds sieve limit {self.limit}")

    def factor(self, n: int) -> list[tuple[int, int]]:
        self._check(n)
        out: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.spf[n])
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            out.append((p, a))
        return out

    def sigma(self, s: complex, n: int) -> complex:
        """sigma_s(n) from the factorisation of n."""
        if n < 1:
            raise DomainError("n >= 1")
        s = complex(s)
        value = 1.0 + 0j
        for p, a in self.factor(n):
            ps = cmath.exp(s * math.log(p))
            if abs(ps - 1.0) < 1e-12:
                # geometric ratio degenerates; add the powers directly
                value *= sum(cmath.exp(j * s * math.log(p)) for j in range(a + 1))
            else:
                value *= (cmath.exp((a + 1) * s * math.log(p)) - 1.0) / (ps - 1.0)
        return value

    def sigma_batch(self, s: complex, n_max: int) -> np.ndarray:
        """Array whose entry n is sigma_s(n) for 1 <= n <= n_max (entry 0 is 0)."""
        self._check(n_max)
        s = complex(s)
        table = self._tables.get(s)
        if table is None or table.size <= n_max:
            size = max(n_max, 1024)
            if table is not None:
                size = max(size, 2 * (table.size - 1))
            size = min(size, self.limit)
            table = kernels.sigma_batch(s, self.spf, size)
            if len(self._tables) > 32:
                self._tables.pop(next(iter(self._tables)))
            self._tables[s] = table
        return table[: n_max + 1]


@lru_cache(maxsize=4)
def default_cache(limit: int = DEFAULT_SIEVE_LIMIT) -> SigmaCache:
    return SigmaCache(limit)


_small_cache: SigmaCache | None = None
_sieve_limit = DEFAULT_SIEVE_LIMIT


def set_sieve_limit(limit: int) -> None:
    """Cap the sieve behind the shared sigma caches."""
    global _sieve_limit, _small_cache
    if limit < 1024:
        raise DomainError("sieve limit >= 1024")
    _sieve_limit = int(limit)
    _small_cache = None


def _working_cache(n: int) -> SigmaCache:
    # the small cache serves every registry series without building the full sieve
    global _small_cache
    small = min(1 << 16, _sieve_limit)
    if n <= small:
        if _small_cache is None:
            _small_cache = SigmaCache(small)
        return _small_cache
    return default_cache(_sieve_limit)


def sigma(s: complex, n: int, cache: SigmaCache | None = None) -> complex:
    """Generalised divisor sum sigma_s(n) = sum over d | n of d**s."""
    return (cache or _working_cache(n)).sigma(s, n)


def _fsum_complex(values) -> complex:
    arr = np.asarray(values, dtype=complex)
    return complex(math.fsum(arr.real), math.fsum(arr.imag))


# ------------------------------------------------------------ exponential


def _exp_tail(anchor: float, rate: float, n: int) -> float:
    # integral over (n, inf) of the envelope C exp(-rate sqrt(x)) through the anchor term
    return anchor * 2.0 * (rate * math.sqrt(n) + 1.0) / rate**2


def sum_exponential(term: Term, rate: float, tol: float, max_terms: int = 10**6) -> SeriesResult:
    """Sum terms bounded by C exp(-rate sqrt(n)).

    Stops once |term| < tol max(1, |partial|) for five consecutive n (n >= 8).
    The tail is bounded by integrating the envelope fitted through the last
    term.  ``converged`` means abs_err <= tol * max(1, |value|).
    """
    if not rate > 0:
        raise DomainError("rate > 0")
    if not tol > 0:
        raise DomainError("tol > 0")
    values: list[complex] = []
    partial = 0j
    quiet = 0
    n = 0
    last = 0.0
    while n < max_terms:
        n += 1
        t = complex(term(n))
        values.append(t)
        partial += t
        last = abs(t)
        if last < tol * max(1.0, abs(partial)):
            quiet += 1
            if quiet >= 5 and n >= 8:
                anchor = max(abs(v) for v in values[-5:])
                if _exp_tail(anchor, rate, n) <= 0.5 * tol * max(1.0, abs(partial)):
                    break
        else:
            quiet = 0
    value = _fsum_complex(values)
    if n >= max_terms:
        return SeriesResult(value, math.inf, n, INCONCLUSIVE)
    tail = _exp_tail(max(abs(v) for v in values[-5:]), rate, n)
    rounding = 4 * DBL_EPS * float(np.abs(np.asarray(values)).sum())
    err = tail + rounding
    verdict = CONVERGED if err <= tol * max(1.0, abs(value)) else INCONCLUSIVE
    return SeriesResult(value, err, n, verdict)


# -------------------------------------------------------------- algebraic


def _loglog_fit(ns: np.ndarray, mags: np.ndarray):
    keep = mags > 0
    ns, mags = ns[keep], mags[keep]
    if ns.size < 8:
        return None
    x = np.log(ns)
    y = np.log(mags)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return -slope, math.exp(intercept), float(np.sqrt(np.mean(resid**2)))


def sum_algebraic(
    term: Term,
    exponent_hint: float,
    tol: float,
    n_direct: int = DEFAULT_N_DIRECT,
    tail: Callable[[int], tuple[complex, float]] | None = None,
    max_direct: int = MAX_N_DIRECT,
) -> SeriesResult:
    """Sum terms decaying like C n^{-p}, p > 1.

    Without ``tail`` the remainder after n_direct terms is estimated from a
    log-log fit over the last quarter of the direct terms (at least 32
    points); its uncertainty is |tail| * max(0.5, fit residual factor) and
    n_direct escalates tenfold up to ``max_direct`` while that exceeds tol.

    ``tail(M)`` may instead supply the exact remainder after M terms together
    with its error; two cutoffs are then compared to bound the truncation.
    """
    if not tol > 0:
        raise DomainError("tol > 0")
    values = np.zeros(0, dtype=complex)

    def extend(upto):
        nonlocal values
        start = values.size + 1
        if upto >= start:
            new = np.fromiter((complex(term(k)) for k in range(start, upto + 1)), dtype=complex, count=upto - start + 1)
            values = np.concatenate([values, new])

    if tail is not None:
        m1 = n_direct
        m2 = n_direct + max(16, n_direct // 2)
        extend(m2)
        t1, e1 = tail(m1)
        t2, e2 = tail(m2)
        v1 = _fsum_complex(values[:m1]) + t1
        v2 = _fsum_complex(values) + t2
        rounding = 4 * DBL_EPS * float(np.abs(values).sum())
        err = abs(v1 - v2) + e1 + e2 + rounding
        verdict = CONVERGED if err <= tol * max(1.0, abs(v2)) else INCONCLUSIVE
        return SeriesResult(v2, err, m2, verdict)

    n = n_direct
    while True:
        extend(n)
        lo = max(1, min(n - 32, (3 * n) // 4))
        ns = np.arange(lo, n + 1, dtype=float)
        window = values[lo - 1 : n]
        fit = _loglog_fit(ns, np.abs(window))
        partial = _fsum_complex(values[:n])
        if fit is None:
            return SeriesResult(partial, math.inf, n, INCONCLUSIVE)
        p, _, resid = fit
        if p <= 1.05:
            return SeriesResult(partial, math.inf, n, INCONCLUSIVE)
        # complex amplitude with the fitted exponent keeps the phase of the terms
        amp = complex(np.mean(window * ns**p))
        edge = n + 0.5
        tail_val = amp * edge ** (1.0 - p) / (p - 1.0)
        spread = math.expm1(resid * math.log(edge))
        err = abs(tail_val) * max(0.5, spread) + 4 * DBL_EPS * float(np.abs(values).sum())
        value = partial + tail_val
        if err <= tol * max(1.0, abs(value)):
            return SeriesResult(value, err, n, CONVERGED)
        if n * 10 > max_direct:
            return SeriesResult(value, err, n, INCONCLUSIVE)
        n *= 10


# ------------------------------------------------------------- divergence


def _divergence_scan(term: Term, window: int, max_terms: int):
    if window < 16:
        raise DomainError("window >= 16")
    mags: list[float] = []
    n_check = max(4 * window, 256)
    partial = 0j
    while True:
        while len(mags) < n_check:
            t = complex(term(len(mags) + 1))
            partial += t
            mags.append(abs(t))
        arr = np.asarray(mags)
        tailw = arr[-window:]
        if not np.any(tailw):
            return CONVERGED, len(mags), partial
        ns = np.arange(len(arr) - window + 1, len(arr) + 1, dtype=float)
        keep = tailw > 0
        slope = np.polyfit(ns[keep], np.log(tailw[keep]), 1)[0] if keep.sum() >= 4 else -math.inf
        ratio = math.exp(slope)
        if ratio < 1.0 - 1.0 / window:
            return CONVERGED, len(mags), partial
        lo = max(1, (3 * len(arr)) // 4)
        fit = _loglog_fit(np.arange(lo, len(arr) + 1, dtype=float), arr[lo - 1 :])
        if fit is not None:
            p = fit[0]
            if p <= 1.05:
                return DIVERGED, len(mags), partial
            if p > 1.25:
                return CONVERGED, len(mags), partial
        if n_check >= max_terms:
            return INCONCLUSIVE, len(mags), partial
        n_check = min(2 * n_check, max_terms)


def detect_divergence(term: Term, window: int = 64, max_terms: int = 10**5) -> str:
    """Classify a series from the trend of its terms.

    diverged: the per-step ratio of |term| over the last window stays above
    1 - 1/window and the log-log decay exponent is at most 1.05 (terms not
    summable); converged: a geometric or n^{-p}, p > 1.25, bound holds.
    """
    return _divergence_scan(term, window, max_terms)[0]


# ----------------------------------------------------- Dirichlet machinery


def dirichlet_sigma_series(s: complex, w: complex) -> complex:
    """sum_{n>=1} sigma_s(n) n^{-w} = zeta(w) zeta(w - s)."""
    s, w = complex(s), complex(w)
    if not w.real > 1:
        raise DomainError("Re(w) > 1")
    if not (w - s).real > 1:
        raise DomainError("Re(w - s) > 1")
    return zeta(w) * zeta(w - s)


def _dirichlet_value(s: complex, p: complex, log_power: int) -> complex:
    # sum_{n>=1} sigma_s(n) n^{-p} (log n)^j = (-d/dp)^j zeta(p) zeta(p - s)
    def f(q):
        return zeta(q) * zeta(q - s)

    if log_power == 0:
        return f(p)
    gap = min(p.real, (p - s).real) - 1.0
    radius = min(0.25, 0.5 * gap)
    if log_power == 1:
        return -cauchy_derivative(f, p, radius)
    if log_power == 2:
        return cauchy_derivative(lambda q: cauchy_derivative(f, q, 0.5 * radius), p, 0.5 * radius)
    raise ValueError("log powers above 2 are not supported")


@dataclass(frozen=True)
class PowerTerm:
    """coef * n^{-exponent} * (log n)^log_power."""

    coef: complex
    exponent: complex
    log_power: int = 0


@dataclass(frozen=True)
class AsymptoticFamily:
    """A summand piece n^{-exponent} (log n)^log_power phi(1/n), phi analytic in |u| < radius."""

    exponent: complex
    phi: Callable[[complex], complex]
    radius: float
    log_power: int = 0


_FFT_NODES = 64
_NEGLIGIBLE = 1e-17


def expansion_terms(family: AsymptoticFamily, n_terms: int = 14) -> list[PowerTerm]:
    """Taylor coefficients of phi at 0 from an FFT on the circle |u| = radius/2."""
    rho = 0.5 * family.radius
    nodes = rho * np.exp(2j * np.pi * np.arange(_FFT_NODES) / _FFT_NODES)
    samples = np.array([complex(family.phi(complex(u))) for u in nodes])
    coefs = np.fft.fft(samples) / _FFT_NODES
    out = []
    for k in range(n_terms):
        c = complex(coefs[k]) / rho**k
        out.append(PowerTerm(c, complex(family.exponent) + k, family.log_power))
    return out


def sigma_tail(s: complex, terms: Sequence[PowerTerm], m: int, cache: SigmaCache | None = None):
    """sum_{n>m} sigma_s(n) sum_terms coef n^{-p} (log n)^j, with an error estimate."""
    s = complex(s)
    cache = cache or _working_cache(m)
    sig = cache.sigma_batch(s, m)[1:]
    n = np.arange(1, m + 1, dtype=float)
    logn = np.log(n)
    total = 0j
    err = 0.0
    for t in terms:
        weight = abs(t.coef) * m ** (-t.exponent.real + max(0.0, s.real)) * (1 + math.log(m)) ** t.log_power
        if weight < _NEGLIGIBLE * 1e-3:
            continue
        p = complex(t.exponent)
        if not (p.real > 1 and (p - s).real > 1):
            if abs(t.coef) < 1e-13:
                continue
            raise DomainError("Re(p) > 1 and Re(p - s) > 1 for every retained tail term")
        if (p - s).real - 1.0 >= _DIRECT_GAP:
            # steep term: direct summation avoids the zeta-minus-partial cancellation
            # whenever its truncation bound beats the subtraction's rounding error
            piece, bound = _direct_tail(s, p, t.log_power, m, cache)
            if bound < 1e-15 * 10.0 ** (3 * t.log_power):
                total += t.coef * piece
                err += abs(t.coef) * (bound + 1e-15 * abs(piece))
                continue
        full = _dirichlet_value(s, p, t.log_power)
        part = _fsum_complex(sig * np.exp(-p * logn) * logn**t.log_power)
        piece = t.coef * (full - part)
        total += piece
        # zeta is good to ~1e-13 relative; each Cauchy derivative costs ~3 digits
        err += abs(t.coef) * (abs(full) + abs(part)) * 1e-13 * 10.0 ** (3 * t.log_power)
    return total, err


_DIRECT_GAP = 3.0


def _direct_tail(s: complex, p: complex, log_power: int, m: int, cache: SigmaCache):
    """sum_{m<n<=L} sigma_s(n) n^{-p} (log n)^j and a bound on the part beyond L."""
    top = min(64 * m, cache.limit)
    sig = cache.sigma_batch(s, top)[m + 1:]
    n = np.arange(m + 1, top + 1, dtype=float)
    logn = np.log(n)
    piece = _fsum_complex(sig * np.exp(-p * logn) * logn**log_power)
    # sigma_s(n) <= d(n) n^{max(Re s, 0)} and d(n) <= 2 sqrt(n)
    q = (p - s).real - 1.5 if s.real > 0 else p.real - 1.5
    bound = 2.0 * top ** (-q) * (1 + math.log(top)) ** log_power / max(q, 0.5) * 4.0
    return piece, bound


def sigma_series(
    s: complex,
    summand: Term,
    families: Sequence[AsymptoticFamily],
    tol: float = 1e-9,
    n_direct: int | None = None,
    n_terms: int = 14,
    cache: SigmaCache | None = None,
) -> SeriesResult:
    """sum_{n>=1} sigma_s(n) summand(n) where summand(n) = sum over families for large n."""
    s = complex(s)
    rmin = min(f.radius for f in families)
    m = n_direct or max(128, int(math.ceil(32.0 / rmin)))
    terms: list[PowerTerm] = []
    for fam in families:
        terms.extend(expansion_terms(fam, n_terms))
    m2 = m + max(16, m // 2)
    cache = cache or _working_cache(m2)
    sig = cache.sigma_batch(s, m2)

    def term(n):
        return sig[n] * summand(n)

    def tail(mm):
        return sigma_tail(s, terms, mm, cache)

    return sum_algebraic(term, 0.0, tol, m, tail=tail)
