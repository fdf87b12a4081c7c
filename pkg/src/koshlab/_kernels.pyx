# cython: boundscheck=False, wraparound=False, cdivision=True
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cdef extern from "complex.h":
    double complex cexp(double complex)
    double complex clog(double complex)
    double cabs(double complex)

cnp.import_array()


def spf_sieve(long limit):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] spf = np.zeros(limit + 1, dtype=np.int64)
    cdef long p, k
    if limit >= 1:
        spf[1] = 1
    for p in range(2, limit + 1):
        if spf[p] == 0:
            spf[p] = p
            if p <= limit // p:
                k = p * p
                while k <= limit:
                    if spf[k] == 0:
                        spf[k] = p
                    k += p
    return spf


def sigma_batch(double complex s, cnp.int64_t[:] spf, long n_max):
    out_arr = np.zeros(n_max + 1, dtype=np.complex128)
    if n_max < 1:
        return out_arr
    cdef double complex[:] out = out_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ppart_arr = np.ones(n_max + 1, dtype=np.int64)
    cdef cnp.int64_t[:] ppart = ppart_arr
    cdef long n, p, m, pk, rest
    out[1] = 1.0
    for n in range(2, n_max + 1):
        p = spf[n]
        m = n // p
        if m == 1 or spf[m] != p:
            ppart[n] = p
            out[n] = out[m] * (1.0 + cexp(s * clog(<double complex>p)))
        else:
            pk = ppart[m] * p
            ppart[n] = pk
            rest = n // pk
            if rest == 1:
                out[n] = out[m] + cexp(s * clog(<double complex>n))
            else:
                out[n] = out[rest] * out[pk]
    return out_arr


def bessel_series(double complex nu, double complex q, double tol, long max_terms):
    cdef double complex term = 1.0
    cdef double complex total = 1.0
    cdef double abs_total = 1.0
    cdef double a
    cdef long m = 0
    cdef int small = 0
    cdef double nu_abs = cabs(nu)
    while m < max_terms:
        m += 1
        term = term * q / (m * (nu + m))
        total = total + term
        a = cabs(term)
        abs_total += a
        if a <= tol * cabs(total) or a == 0.0:
            small += 1
            if small >= 2 and m > nu_abs:
                break
        else:
            small = 0
    return complex(total), abs_total, m + 1


def hyp2f1_series(double complex a, double complex b, double complex c, double complex z,
                  double rtol, long max_terms):
    cdef double complex term = 1.0
    cdef double complex total = 1.0
    cdef double abs_total = 1.0
    cdef double last = 1.0
    cdef long n = 0
    cdef int small = 0
    cdef bint converged = False
    while n < max_terms:
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1
        total = total + term
        last = cabs(term)
        abs_total += last
        if last == 0.0:
            converged = True
            break
        if last < rtol * cabs(total):
            small += 1
            if small >= 3:
                converged = True
                break
        else:
            small = 0
    return complex(total), abs_total, last, n + 1, converged
