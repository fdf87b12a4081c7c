"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

from koshlab import _kernels_py as pure

try:
    from koshlab import _kernels as compiled
except ImportError:
    compiled = None

CASES = {
    "spf_sieve(10**5)": lambda k: k.spf_sieve(10**5),
    "sigma_batch(0.5, 10**5)": None,
    "bessel_series(0.3, -4.0, ...)": lambda k: k.bessel_series(0.3 + 0j, -4.0 + 0j, 1e-17, 200),
    "hyp2f1_series(0.5, 0.25, 1.5, 0.6)": lambda k: k.hyp2f1_series(0.5 + 0j, 0.25 + 0j, 1.5 + 0j, 0.6 + 0j, 1e-17, 10**5),
}


def _sigma_case(k):
    spf = k.spf_sieve(10**5)
    return lambda: k.sigma_batch(0.5 + 0j, spf, 10**5)


def bench(mod, name, repeat):
    if name.startswith("sigma_batch"):
        fn = _sigma_case(mod)
    else:
        case = CASES[name]
        fn = lambda: case(mod)  # noqa: E731
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':40s} {'pure [s]':>12s} {'compiled [s]':>14s} {'speedup':>9s}")
    for name in CASES:
        t_pure = bench(pure, name, args.repeat)
        if compiled is None:
            print(f"{name:40s} {t_pure:12.3e} {'n/a':>14s}")
            continue
        t_comp = bench(compiled, name, args.repeat)
        print(f"{name:40s} {t_pure:12.3e} {t_comp:14.3e} {t_pure / t_comp:8.1f}x")


if __name__ == "__main__":
    main()
