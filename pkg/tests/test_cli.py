import json
import math

import pytest

from koshlab import series
from koshlab.cli import dumps, main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text,value", [("2", 2), ("-1.5", -1.5), (".5", 0.5), ("1+2i", 1 + 2j), ("0.25-0.5i", 0.25 - 0.5j)])
def test_complex_literals(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["1/2", "1 + 2i", "2i", "0x10", "", "1e-3", "1+i"])
def test_rejected_literals(text, capsys):
    code, _, err = run(capsys, "verify", "sommerfeld", f"a={text}")
    assert code == 4 and "usage error" in err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "sommerfeld" in out and "ramanujan-p336-divergent" in out
    code, out2, _ = run(capsys, "list")
    assert out == out2
    code, out, _ = run(capsys, "--json", "list")
    rows = json.loads(out)
    assert len(rows) == 25
    assert {"id", "anchor", "params", "domain"} <= set(rows[0])


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "sommerfeld", "a=2", "ρ=1", "ξ=1")[0] == 0
    code, _, err = run(capsys, "verify", "sommerfeld", "a=0")
    assert code == 3 and "Re(a) > |Im(ρ)|" in err
    assert run(capsys, "verify", "nosuchid")[0] == 2
    assert run(capsys, "verify", "ramanujan-p336-divergent")[0] == 0


def test_tolerance_range(capsys, monkeypatch):
    assert run(capsys, "verify", "hardy-analogue", "--tol", "1e-13")[0] == 3
    assert run(capsys, "verify", "hardy-analogue", "--tol", "0.5")[0] == 3
    monkeypatch.setenv("KOSHLAB_TOL", "1e-9")
    code, out, _ = run(capsys, "--json", "verify", "hardy-analogue")
    assert code == 0 and json.loads(out)["tol"] == 1e-9
    code, out, _ = run(capsys, "--json", "verify", "hardy-analogue", "--tol", "1e-4")
    assert json.loads(out)["tol"] == 1e-4


def test_json_report_round_trip(capsys):
    code, out, _ = run(capsys, "--json", "verify", "sommerfeld")
    doc = json.loads(out)
    assert dumps(doc) + "\n" == out
    for key in ("id", "params", "lhs", "rhs", "lhs_err", "rhs_err", "abs_diff", "rel_diff", "tol", "pass",
                "verdict", "wall_ms", "counters"):
        assert key in doc
    assert doc["params"]["a"] == [2.0, 0.0]
    code, out, _ = run(capsys, "--json", "verify", "ramanujan-p336-divergent")
    doc = json.loads(out)
    assert doc["verdict"] == "diverged" and doc["lhs_err"] is None
    assert dumps(doc) + "\n" == out


def test_sweep(capsys):
    code, out, _ = run(capsys, "--json", "sweep", "dixmol", "β=0.5:2:3", "λ=0:1:2")
    docs = json.loads(out)
    assert code == 0 and len(docs) == 6
    assert [d["params"]["beta"][0] for d in docs] == [0.5, 0.5, 1.25, 1.25, 2.0, 2.0]
    code, out, _ = run(capsys, "--json", "sweep", "dixmol", "β=0.5:2:0")
    assert code == 0 and json.loads(out) == []
    code, out, _ = run(capsys, "--json", "sweep", "hardy-analogue", "β=1:4:4")
    assert code == 0 and all(d["pass"] for d in json.loads(out))
    code, _, _ = run(capsys, "sweep", "sommerfeld", "a=-1:2:2")
    assert code == 1
    assert run(capsys, "sweep", "nosuchid", "a=1:2:2")[0] == 2


def test_parallel_sweep_keeps_grid_order(capsys):
    code, out, _ = run(capsys, "--json", "--parallel", "2", "sweep", "hardy-analogue", "β=1:4:4")
    serial = json.loads(run(capsys, "--json", "sweep", "hardy-analogue", "β=1:4:4")[1])
    par = json.loads(out)
    assert code == 0
    assert [d["params"] for d in par] == [d["params"] for d in serial]
    assert [d["lhs"] for d in par] == [d["lhs"] for d in serial]


def test_eval(capsys):
    code, out, _ = run(capsys, "--json", "eval", "K", "0.5", "1")
    assert code == 0
    assert abs(json.loads(out)["value"][0] - math.sqrt(math.pi / 2) * math.exp(-1)) < 1e-12
    code, out, _ = run(capsys, "--json", "eval", "sigma", "1", "6")
    assert json.loads(out)["value"] == [12.0, 0.0]
    code, out, _ = run(capsys, "eval", "zeta", "0")
    assert out.startswith("-0.5")
    for fn, args in [("gamma", ["2.5"]), ("2f1", ["-1.5", "-1", "0.5", "0.25"]), ("J", ["0", "1"]), ("Y", ["0", "1"]),
                     ("I", ["0", "1"]), ("M", ["0.5", "2"]), ("F", ["0.5", "2"]), ("A", ["0", "1", "2", "1", "1"]),
                     ("h", ["-1", "1", "4", "1"])]:
        assert run(capsys, "eval", fn, *args)[0] == 0
    assert run(capsys, "eval", "nosuch", "1")[0] == 2
    assert run(capsys, "eval", "gamma", "0")[0] == 3
    assert run(capsys, "eval", "h", "-0.5", "0.25", "4", "1")[0] == 3


def test_sieve_limit_flag(capsys):
    try:
        assert run(capsys, "--sieve-limit", "100000", "eval", "sigma", "0", "99991")[0] == 0
        assert run(capsys, "--sieve-limit", "10", "eval", "sigma", "0", "6")[0] == 3
    finally:
        series.set_sieve_limit(series.DEFAULT_SIEVE_LIMIT)
