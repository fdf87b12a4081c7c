"""Acceptance criteria 1-10: tolerances and time limits as stated for each."""
import cmath
import math
import time

import numpy as np
import pytest

from koshlab import identities as ids
from koshlab.bessel import bessel_i, bessel_j, bessel_k, bessel_y, koshliakov_kernel, m_kernel
from koshlab.complexcore import gamma, hyp2f1, zeta
from koshlab.series import DIVERGED, sigma


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def residual(identity_id, point):
    rep, wall = timed(ids.verify, identity_id, point, 1e-6)
    return rep, wall


def test_criterion_01_sommerfeld(report):
    rep, wall = residual("sommerfeld", {"a": 2, "rho": 1, "xi": 1})
    exact = math.exp(-math.sqrt(5)) / math.sqrt(5)
    rel = abs(rep.lhs.value - exact) / exact
    report(1, rel <= 1e-8 and wall < 1.0, f"sommerfeld rel={rel:.2e} (<=1e-8), {wall:.2f}s (<1s)")


def test_criterion_02_fock_pair(report):
    fb, w1 = residual("fock-bursian", {})
    kf, w2 = residual("koshliakov-fock", {})
    k0, w3 = residual("koshliakov-fock", {"s": 0})
    same = max(abs(k0.lhs.value - fb.lhs.value) / abs(fb.lhs.value), abs(k0.rhs.value - fb.rhs.value) / abs(fb.rhs.value))
    ok = fb.rel_diff <= 1e-7 and kf.rel_diff <= 1e-7 and same <= 1e-9 and max(w1, w2, w3) < 5
    report(2, ok, f"fock-bursian rel={fb.rel_diff:.2e}, koshliakov-fock rel={kf.rel_diff:.2e}, "
                  f"s=0 vs fock-bursian {same:.2e}; max {max(w1, w2, w3):.2f}s")


def test_criterion_03_fock_analogue(report):
    rep, wall = residual("thm-fock-analogue", {"rho": 1, "z": 2, "w": 1, "s": 0.5, "lambda": 0.5})
    report(3, rep.rel_diff <= 1e-6 and wall < 30, f"thm-fock-analogue rel={rep.rel_diff:.2e}, {wall:.2f}s")


def test_criterion_04_series_transform(report):
    a, w1 = residual("thm-series-transform", {"alpha": 4, "beta": 1, "s": 1, "lambda": 1})
    b, w2 = residual("thm-series-transform", {"alpha": 4, "beta": 1, "s": -0.5, "lambda": 0.5})
    ok = a.rel_diff <= 1e-6 and b.rel_diff <= 1e-6 and max(w1, w2) < 10
    report(4, ok, f"(s=1,λ=1) rel={a.rel_diff:.2e} {w1:.2f}s; (s=-1/2,λ=1/2) rel={b.rel_diff:.2e} {w2:.2f}s")


def test_criterion_05_analytic_continuation(report):
    rep, _ = residual("thm-analytic-cont", {"alpha": 4, "beta": 1, "lambda": -0.25, "s": 1})
    p_corr = ids.bracket_decay_exponent(4, 1, 1, -0.25, corrected=True)
    p_plain = ids.bracket_decay_exponent(4, 1, 1, -0.25, corrected=False)
    need = -0.25 + 1 + 2 - 0.1
    ok = rep.rel_diff <= 1e-6 and p_corr >= need and p_corr > p_plain
    report(5, ok, f"rel={rep.rel_diff:.2e}; fitted decay {p_corr:.3f} (>= {need:.2f}) vs uncorrected {p_plain:.3f}")


SERIES_SUITE_POINTS = (
    [("dixmol", {"beta": 1, "lambda": l}) for l in (-0.5, 0, 1)]
    + [("dixmolgen", {"beta": 1, "s": s}) for s in (0, 0.5, 1)]
    + [("hardy-analogue", {"beta": 1}), ("exotic", {"alpha": 4, "beta": 1})]
    + [("ramanujan-corrected", {"beta": 1, "s": s}) for s in (0, 0.5, 1)]
    + [("zeta-half-squared", {"beta": 1}), ("lambda-zero", {"alpha": 4, "beta": 1})]
    + [("sigma-plus-lambda", {"beta": 1, "lambda": l}) for l in (0.5, 1)]
    + [("koshvor", {"beta": 1}), ("vorram", {"a": 1.5})]
)


def test_criterion_06_series_suite(report):
    t0 = time.perf_counter()
    worst, worst_id = 0.0, ""
    for identity_id, point in SERIES_SUITE_POINTS:
        rep = ids.verify(identity_id, point, 1e-6)
        if rep.rel_diff > worst:
            worst, worst_id = rep.rel_diff, identity_id
    wall = time.perf_counter() - t0
    report(6, worst <= 1e-6 and wall < 180,
           f"{len(SERIES_SUITE_POINTS)} points, worst rel={worst:.2e} ({worst_id}), {wall:.2f}s (<180s)")


AUXILIARY = ["kpair-integral", "jexp-integral", "ilaplace", "ik-moment", "koshliakov-mkernel", "watson-jk", "sonine",
             "sonine-analogue"]


def test_criterion_07_auxiliary_integrals(report):
    rows = []
    ok = True
    for identity_id in AUXILIARY:
        rep, wall = residual(identity_id, {})
        ok &= rep.rel_diff <= 1e-6 and wall < 30
        rows.append(f"{identity_id}={rep.rel_diff:.1e}/{wall:.2f}s")
    report(7, ok, ", ".join(rows))


def test_criterion_08_divergence(report):
    rep, wall = residual("ramanujan-p336-divergent", {"beta": 1, "s": 0.25})
    used = rep.lhs.evals
    report(8, rep.verdict == DIVERGED and used <= 10**5, f"verdict={rep.verdict} after {used} terms, {wall:.2f}s")


def test_criterion_09_limit_consistency(report):
    beta, alpha = 1.0, 1.0 + 1e-4
    lam = 0.5
    thm = ids.verify("thm-series-transform", {"alpha": alpha, "beta": beta, "s": -lam, "lambda": lam})
    dix = ids.verify("dixmol", {"beta": beta, "lambda": lam})
    scale = 2 * gamma(lam + 1).real / math.pi**lam / (math.sqrt(alpha) - math.sqrt(beta)) ** lam
    d1 = max(abs(scale * thm.lhs.value - dix.lhs.value) / abs(dix.lhs.value),
             abs(scale * thm.rhs.value - dix.rhs.value) / abs(dix.rhs.value))
    l0 = ids.verify("lambda-zero", {"alpha": alpha, "beta": beta})
    kv = ids.verify("koshvor", {"beta": beta})
    d2 = max(abs(2 * l0.lhs.value - kv.lhs.value) / abs(kv.lhs.value),
             abs(2 * l0.rhs.value - kv.rhs.value) / abs(kv.rhs.value))
    rc = ids.verify("ramanujan-corrected", {"beta": beta, "s": 0})
    zh = ids.verify("zeta-half-squared", {"beta": beta})
    # both sides of the s = 0 case map onto the zeta(1/2)^2 identity after an affine change
    shift = zeta(0.5).real ** 2 / math.sqrt(2) - math.pi * math.sqrt(beta)
    root_pi = math.sqrt(math.pi)
    d3 = max(abs(rc.lhs.value / root_pi + shift - zh.rhs.value), abs(rc.rhs.value / root_pi + shift - zh.lhs.value))
    ok = d1 <= 5e-4 and d2 <= 5e-4 and d3 <= 1e-9
    report(9, ok, f"thm->dixmol {d1:.2e} (<=5e-4), lambda-zero->koshvor {d2:.2e} (<=5e-4), "
                  f"ramanujan-corrected->zeta-half-squared {d3:.2e} (<=1e-9)")


def _primitive_suite():
    rng = np.random.default_rng(20240611)
    worst = {}

    def track(key, value):
        worst[key] = max(worst.get(key, 0.0), value)

    for _ in range(200):
        z = complex(rng.uniform(-6, 8), rng.uniform(-6, 6))
        if abs(z - round(z.real)) < 1e-2:
            continue
        track("gamma", abs(gamma(z + 1) - z * gamma(z)) / abs(z * gamma(z)))
        track("gamma", abs(gamma(z) * gamma(1 - z) * cmath.sin(math.pi * z) - math.pi) / math.pi)
    for _ in range(200):
        s = complex(rng.uniform(-6, 7), rng.uniform(-10, 10))
        if abs(s - 1) < 0.05 or abs(s) < 0.05:
            continue
        rhs = 2**s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2) * gamma(1 - s) * zeta(1 - s)
        track("zeta-fe", abs(zeta(s) - rhs) / max(1.0, abs(rhs)))
    track("zeta-values", max(abs(zeta(0) + 0.5), abs(zeta(2) - math.pi**2 / 6) / (math.pi**2 / 6)))
    for _ in range(150):
        s = rng.uniform(-2.5, 2.5)
        z = complex(rng.uniform(0.2, 30), rng.uniform(-15, 15))
        if abs(s - round(s)) < 1e-3 or abs(s) < 1e-3:
            continue
        j1y0 = bessel_j(s + 1, z).value * bessel_y(s, z).value
        jy = j1y0 - bessel_j(s, z).value * bessel_y(s + 1, z).value
        track("wronskian", abs(jy - 2 / (math.pi * z)) / max(1.0, abs(j1y0)))
        ik0 = bessel_i(s, z).value * bessel_k(s + 1, z).value
        ik = ik0 + bessel_i(s + 1, z).value * bessel_k(s, z).value
        track("wronskian", abs(ik - 1 / z) / max(1.0, abs(ik0)))
        sc = complex(s, rng.uniform(-1, 1))
        k1, k2 = bessel_k(sc, z).value, bessel_k(-sc, z).value
        track("k-even", abs(k1 - k2) / abs(k1))
    for x in (0.3, 1.0, 4.0, 19.0, 25.0):
        k_exact = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
        i_exact = math.sqrt(2 / (math.pi * x)) * math.cosh(x)
        track("closed-forms", abs(bessel_k(0.5, x).value - k_exact) / k_exact)
        track("closed-forms", abs(bessel_i(-0.5, x).value - i_exact) / i_exact)
    track("2f1", abs(hyp2f1(-1.5, -1, 0.5, 0.25).value - 1.75) / 1.75)
    for _ in range(300):
        m, n = (int(v) for v in rng.integers(1, 1000, 2))
        if math.gcd(m, n) != 1:
            continue
        s = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
        prod = sigma(s, m) * sigma(s, n)
        track("sigma", abs(sigma(s, m * n) - prod) / abs(prod))
    f0m0 = all(koshliakov_kernel(0, x).value == m_kernel(0, x).value for x in (0.1, 1.0, 7.5, 33.0))
    return worst, f0m0


LIMITS = {"gamma": 1e-11, "zeta-fe": 1e-10, "zeta-values": 1e-12, "wronskian": 1e-10, "k-even": 1e-11,
          "closed-forms": 1e-12, "2f1": 1e-12, "sigma": 1e-12}


def test_criterion_10_primitive_properties(report):
    (worst, f0m0), wall = timed(_primitive_suite)
    ok = f0m0 and wall < 60 and all(worst[k] <= LIMITS[k] for k in LIMITS)
    detail = ", ".join(f"{k}={worst[k]:.1e}" for k in LIMITS)
    report(10, ok, f"{detail}, F0==M0 {f0m0}, {wall:.2f}s (<60s)")
