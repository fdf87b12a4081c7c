import cmath
import math

import pytest

from koshlab import identities as ids
from koshlab.errors import DomainError
from koshlab.series import DIVERGED, detect_divergence

from conftest import close


def test_registry_shape():
    listed = ids.list_ids()
    assert len(listed) == 25
    assert "sommerfeld" in listed and "ramanujan-p336-divergent" in listed
    assert "cohen" not in listed
    assert len(ids.list_ids(include_optional=True)) == 26


@pytest.mark.parametrize("identity_id", ids.list_ids(include_optional=True))
def test_default_points_in_domain(identity_id):
    entry = ids.REGISTRY[identity_id]
    for point in entry.default_points:
        assert entry.domain_predicate(point), point


def test_build_a_at_s_zero():
    z, w, t = 2, 1, 1
    zz, ww = cmath.sqrt(z * z + 1j * t), cmath.sqrt(w * w + 1j * t)
    expected = (zz - ww) / (zz + ww) / (zz * ww)
    assert close(ids.build_A(0, 1, z, w, t), expected, 1e-14)


@pytest.mark.parametrize("alpha,beta,n", [(4, 1, 1), (4, 1, 7), (3 + 1j, 1 - 0.5j, 2)])
def test_build_a_exotic_special_case(alpha, beta, n):
    za, zb = cmath.sqrt(alpha + 1j * n), cmath.sqrt(beta + 1j * n)
    expected = 0.25 * (za - zb) / (za + zb)
    assert close(ids.build_A(-1, 1, cmath.sqrt(alpha), cmath.sqrt(beta), n), expected, 1e-13)


@pytest.mark.parametrize("s,lam,t", [(0.5, 0.5, 3.0), (1.0, 0.25, 0.4), (-0.3, 1.5, 12.0)])
def test_build_a_reflection(s, lam, t):
    assert close(ids.build_A(s, lam, 2, 1, -t), ids.build_A(s, lam, 2, 1, t).conjugate(), 1e-14)


def test_build_a_zero_ratio():
    assert ids.build_A(0.5, 0.5, 1.5, 1.5, 0) == 0
    with pytest.raises(DomainError):
        ids.build_A(0.5, 0.5, 1j, 1, 1)


def test_h_function():
    assert ids.h_fun(1, 1, 4, 1) == 0
    assert close(ids.h_fun(-1, 1, 4, 1), 3 / 32, 1e-15)
    with pytest.raises(DomainError):
        ids.h_fun(-0.5, 0.25, 4, 1)


def test_verify_reports():
    rep = ids.verify("sommerfeld", {"a": 2, "ρ": 1, "ξ": 1}, tol=1e-8)
    assert rep.passed
    expected = math.exp(-math.sqrt(5)) / math.sqrt(5)
    assert close(rep.lhs.value, expected, 1e-8)
    assert close(rep.rhs.value, expected, 1e-14)
    assert ids.verify("hardy-analogue", {"beta": 1}).passed


def test_verify_domain_violation_names_predicate():
    with pytest.raises(DomainError) as exc:
        ids.verify("sommerfeld", {"a": 0})
    assert exc.value.predicate == "Re(a) > |Im(ρ)|"
    with pytest.raises(DomainError):
        ids.verify("sommerfeld", {"q": 1})
    with pytest.raises(KeyError):
        ids.verify("nosuchid")


def test_sweep():
    assert ids.sweep("sommerfeld", []) == []
    one = ids.sweep("hardy-analogue", [{"beta": 1}])
    assert len(one) == 1 and one[0].passed
    grid = [{"beta": b, "lambda": l} for b in (0.5, 1, 2) for l in (-0.5, 0, 1)]
    reps = ids.sweep("dixmol", grid)
    assert [r.point["beta"] for r in reps] == [g["beta"] for g in grid]
    assert all(r.passed for r in reps)
    bad = ids.sweep("sommerfeld", [{"a": -1}])
    assert not bad[0].passed and bad[0].verdict == "domain"


@pytest.mark.parametrize("identity_id,point", [
    ("thm-series-transform", {"alpha": 3 + 1j, "beta": 1 - 0.5j, "s": 0.5, "lambda": 0.75}),
    ("thm-series-transform", {"alpha": 4, "beta": 1, "s": 1 + 0.5j, "lambda": 1}),
    ("dixmolgen", {"beta": 0.7 + 0.4j, "s": 0.3 - 0.2j}),
    ("sigma-plus-lambda", {"beta": 1, "lambda": 0}),
    ("koshvor", {"beta": 2 - 1j}),
    ("vorram", {"a": 2}),
    ("cohen", {"a": 2.5, "lambda": 0.6, "k": 2}),
    ("dixmol", {"beta": 1, "lambda": 0.01}),
    ("sonine-analogue", {"w": 1.2 + 0.3j, "lambda": 0.4}),
    ("kpair-integral", {"w": 1.5, "s": -0.5, "nu": 1.25}),
    ("ik-moment", {"a": 2.2, "nu": 1.3, "b": 0.2, "c": 1.4}),
])
def test_off_default_points(identity_id, point):
    rep = ids.verify(identity_id, point, tol=1e-6)
    assert rep.passed, rep
    assert rep.abs_diff <= rep.lhs.abs_err + rep.rhs.abs_err


def test_ik_moment_two_forms_agree():
    for a, nu, b, c in [(1.5, 0.5, 0.5, 1), (2.2, 1.3, 0.2, 1.4), (0.8, 0.1, -0.6, 1.0)]:
        assert close(ids.ik_moment_direct(a, nu, b, c), ids.ik_moment_euler(a, nu, b, c), 1e-12)


def test_hardy_is_dixmolgen_at_zero():
    h = ids.verify("hardy-analogue", {"beta": 1.3})
    d = ids.verify("dixmolgen", {"beta": 1.3, "s": 0})
    assert close(h.lhs.value, d.lhs.value, 1e-12)
    assert close(h.rhs.value, d.rhs.value, 1e-9)


def test_sigma_plus_lambda_half_matches_dixmolgen():
    beta = 1.4
    spl = ids.verify("sigma-plus-lambda", {"beta": beta, "lambda": 0.5})
    dg = ids.verify("dixmolgen", {"beta": beta, "s": 0.5})
    factor = math.sqrt(2) * beta**-0.25
    assert close(spl.lhs.value, factor * dg.lhs.value, 1e-11)
    assert close(spl.rhs.value, factor * dg.rhs.value, 1e-8)


def test_divergent_summand_is_flagged():
    assert detect_divergence(ids.divergent_summand(1.0, 0.25)) == DIVERGED
    rep = ids.verify("ramanujan-p336-divergent")
    assert rep.verdict == DIVERGED and rep.passed
    assert math.isinf(rep.lhs.abs_err)


def test_bracket_correction_steepens_decay():
    corrected = ids.bracket_decay_exponent(4, 1, 1, -0.25, corrected=True)
    plain = ids.bracket_decay_exponent(4, 1, 1, -0.25, corrected=False)
    assert corrected > plain + 0.9
