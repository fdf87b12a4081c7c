"""Pure-Python versions of the hot loops; the compiled module mirrors this API."""
from __future__ import annotations

import cmath

import numpy as np


def spf_sieve(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    unset = spf == 0
    unset[0] = False
    spf[unset] = np.nonzero(unset)[0]
    return spf


def sigma_batch(s: complex, spf: np.ndarray, n_max: int) -> np.ndarray:
    # sigma_s(n) for n <= n_max; out[0] is 0
    s = complex(s)
    out = np.zeros(n_max + 1, dtype=np.complex128)
    if n_max < 1:
        return out
    ppart = np.ones(n_max + 1, dtype=np.int64)
    out[1] = 1.0
    for n in range(2, n_max + 1):
        p = int(spf[n])
        m = n // p
        if m == 1 or int(spf[m]) != p:
            ppart[n] = p
            out[n] = out[m] * (1.0 + cmath.exp(s * cmath.log(p)))
        else:
            pk = int(ppart[m]) * p
            ppart[n] = pk
            rest = n // pk
            if rest == 1:
                out[n] = out[m] + cmath.exp(s * cmath.log(n))
            else:
                out[n] = out[rest] * out[pk]
    return out


def bessel_series(nu: complex, q: complex, tol: float, max_terms: int):
    """Sum of q**m / (m! (nu+1)_m) over m >= 0."""
    term = 1.0 + 0j
    total = 1.0 + 0j
    abs_total = 1.0
    m = 0
    small = 0
    while m < max_terms:
        m += 1
        term = term * q / (m * (nu + m))
        total += term
        a = abs(term)
        abs_total += a
        if a <= tol * abs(total) or a == 0.0:
            small += 1
            if small >= 2 and m > abs(nu):
                break
        else:
            small = 0
    return total, abs_total, m + 1


def hyp2f1_series(a: complex, b: complex, c: complex, z: complex, rtol: float, max_terms: int):
    term = 1.0 + 0j
    total = 1.0 + 0j
    abs_total = 1.0
    last = 1.0
    n = 0
    small = 0
    converged = False
    while n < max_terms:
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1
        total += term
        last = abs(term)
        abs_total += last
        if last == 0.0:
            converged = True
            break
        if last < rtol * abs(total):
            small += 1
            if small >= 3:
                converged = True
                break
        else:
            small = 0
    return total, abs_total, last, n + 1, converged
