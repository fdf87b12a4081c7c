"""Command-line interface: list, verify, sweep and eval."""
from __future__ import annotations

import argparse
import itertools
import json
import math
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bessel, complexcore, identities, series
from .errors import DomainError, KoshlabError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 4

TOL_MIN, TOL_MAX = 1e-12, 1e-2
DEFAULT_TOL = 1e-6

_REAL = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)"
_COMPLEX_RE = re.compile(rf"^(?P<re>{_REAL})(?:(?P<im>[+-](?:\d+(?:\.\d*)?|\.\d+))i)?$")


class UsageError(Exception):
    pass


class UnknownNameError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse "<real>" or "<real>+<real>i" / "<real>-<real>i" (decimal, no spaces)."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise UsageError(f"not a complex literal: {text!r} (expected <real> or <real>+<real>i)")
    im = m.group("im")
    return complex(float(m.group("re")), float(im) if im else 0.0)


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _pair(z: complex) -> list:
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


def _num(x: float):
    return float(x) if math.isfinite(x) else None


def report_to_dict(rep: identities.VerificationReport) -> dict:
    return {
        "id": rep.id,
        "params": {k: _pair(v) for k, v in rep.point.items()},
        "lhs": _pair(rep.lhs.value),
        "rhs": _pair(rep.rhs.value),
        "lhs_err": _num(rep.lhs.abs_err),
        "rhs_err": _num(rep.rhs.abs_err),
        "abs_diff": _num(rep.abs_diff),
        "rel_diff": _num(rep.rel_diff),
        "tol": rep.tol,
        "pass": rep.passed,
        "verdict": rep.verdict,
        "wall_ms": round(rep.wall_time * 1000.0, 3),
        "counters": dict(rep.counters),
        "failure": rep.failure,
    }


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, allow_nan=False)


def _fmt(x) -> str:
    if x is None:
        return "-"
    return f"{x:.3e}"


def format_report(rep: identities.VerificationReport) -> str:
    params = " ".join(f"{k}={format_complex(v)}" for k, v in rep.point.items())
    lines = [
        f"{rep.id}  {params}",
        f"  lhs      {format_complex(rep.lhs.value)}  (err {_fmt(_num(rep.lhs.abs_err))})",
        f"  rhs      {format_complex(rep.rhs.value)}  (err {_fmt(_num(rep.rhs.abs_err))})",
        f"  abs_diff {_fmt(_num(rep.abs_diff))}  rel_diff {_fmt(_num(rep.rel_diff))}  tol {rep.tol:g}",
        f"  verdict  {rep.verdict}  {'PASS' if rep.passed else 'FAIL'}  {rep.wall_time * 1000:.1f} ms",
    ]
    if rep.failure:
        lines.append(f"  failure  {rep.failure}")
    return "\n".join(lines)


def resolve_tol(arg: float | None) -> float:
    if arg is None:
        env = os.environ.get("KOSHLAB_TOL")
        if env:
            try:
                arg = float(env)
            except ValueError:
                raise UsageError(f"KOSHLAB_TOL is not a number: {env!r}") from None
        else:
            arg = DEFAULT_TOL
    if not TOL_MIN <= arg <= TOL_MAX:
        raise DomainError("tol in [1e-12, 1e-2]", f"tol = {arg!r}")
    return arg


def _parse_assignments(items, *, grid: bool):
    out = []
    for item in items:
        if "=" not in item:
            raise UsageError(f"expected name=value, got {item!r}")
        name, value = item.split("=", 1)
        name = identities.canonical_name(name)
        if grid:
            parts = value.split(":")
            if len(parts) != 3:
                raise UsageError(f"expected name=start:stop:count, got {item!r}")
            start, stop = parse_complex(parts[0]), parse_complex(parts[1])
            if not re.fullmatch(r"\d+", parts[2]):
                raise UsageError(f"count must be a non-negative integer in {item!r}")
            count = int(parts[2])
            values = [start + (stop - start) * (k / (count - 1) if count > 1 else 0.0) for k in range(count)]
            out.append((name, values))
        else:
            out.append((name, parse_complex(value)))
    return out


def _entry(identity_id: str) -> identities.IdentityEntry:
    try:
        return identities.get_entry(identity_id)
    except KeyError:
        raise UnknownNameError(f"unknown identity id: {identity_id}") from None


# --------------------------------------------------------------- commands


def cmd_list(args) -> int:
    ids = identities.list_ids()
    if args.json:
        rows = []
        for i in ids:
            e = identities.REGISTRY[i]
            rows.append({
                "id": e.id,
                "anchor": e.anchor,
                "params": list(e.param_names),
                "domain": [t for t, _ in e.predicates],
                "default_points": [{k: _pair(v) for k, v in p.items()} for p in e.default_points],
            })
        print(dumps(rows))
        return EXIT_OK
    for i in ids:
        e = identities.REGISTRY[i]
        print(f"{e.id}")
        print(f"    {e.anchor}")
        print(f"    params: {', '.join(e.param_names)}")
        print(f"    domain: {'; '.join(t for t, _ in e.predicates)}")
    return EXIT_OK


def _verify_exit(rep: identities.VerificationReport) -> int:
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    entry = _entry(args.id)
    tol = resolve_tol(args.tol)
    point = dict(_parse_assignments(args.params, grid=False))
    rep = identities.verify(entry.id, point, tol)
    print(dumps(report_to_dict(rep)) if args.json else format_report(rep))
    return _verify_exit(rep)


def _sweep_point(job):
    identity_id, point, tol, sieve_limit = job
    if sieve_limit is not None:
        series.set_sieve_limit(sieve_limit)
    return identities.sweep(identity_id, [point], tol)[0]


def cmd_sweep(args) -> int:
    entry = _entry(args.id)
    tol = resolve_tol(args.tol)
    axes = _parse_assignments(args.grid, grid=True)
    for name, _ in axes:
        if name not in entry.param_names:
            raise DomainError(f"parameter {name} belongs to {entry.id}")
    names = [n for n, _ in axes]
    grid = [dict(zip(names, combo)) for combo in itertools.product(*(v for _, v in axes))] if axes else []
    workers = max(1, int(args.parallel or 1))
    if workers > 1 and len(grid) > 1:
        jobs = [(entry.id, p, tol, args.sieve_limit) for p in grid]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_sweep_point, jobs))
    else:
        reports = identities.sweep(entry.id, grid, tol)
    if args.json:
        print(dumps([report_to_dict(r) for r in reports]))
    else:
        for r in reports:
            print(format_report(r))
        print(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _as_result(v) -> complexcore.EvalResult:
    if isinstance(v, complexcore.EvalResult):
        return v
    v = complex(v)
    return complexcore.EvalResult(v, 4 * complexcore.DBL_EPS * abs(v))


def _int_arg(z: complex) -> int:
    if z.imag != 0 or z.real != math.floor(z.real) or z.real < 1:
        raise DomainError("n is a positive integer")
    return int(z.real)


def _real_pos(z: complex) -> float:
    if z.imag != 0 or not z.real > 0:
        raise DomainError("x > 0 (real)")
    return z.real


EVAL_FUNCTIONS = {
    "gamma": (1, lambda z: _as_result(complexcore.gamma(z))),
    "zeta": (1, lambda s: _as_result(complexcore.zeta(s))),
    "2f1": (4, lambda a, b, c, z: complexcore.hyp2f1(a, b, c, z)),
    "J": (2, lambda s, z: bessel.bessel_j(s, z)),
    "Y": (2, lambda s, z: bessel.bessel_y(s, z)),
    "I": (2, lambda s, z: bessel.bessel_i(s, z)),
    "K": (2, lambda s, z: bessel.bessel_k(s, z)),
    "M": (2, lambda s, x: bessel.m_kernel(s, _real_pos(x))),
    "F": (2, lambda s, x: bessel.koshliakov_kernel(s, _real_pos(x))),
    "sigma": (2, lambda s, n: _as_result(series.sigma(s, _int_arg(n)))),
    "A": (5, lambda s, lam, z, w, t: _as_result(identities.build_A(s, lam, z, w, t))),
    "h": (4, lambda s, lam, a, b: _as_result(identities.h_fun(s, lam, a, b))),
}


def cmd_eval(args) -> int:
    if args.fn not in EVAL_FUNCTIONS:
        raise UnknownNameError(f"unknown function: {args.fn} (one of {', '.join(EVAL_FUNCTIONS)})")
    arity, fn = EVAL_FUNCTIONS[args.fn]
    if len(args.args) != arity:
        raise UsageError(f"{args.fn} takes {arity} arguments, got {len(args.args)}")
    vals = [parse_complex(a) for a in args.args]
    res = fn(*vals)
    if args.json:
        print(dumps({"fn": args.fn, "args": [_pair(v) for v in vals], "value": _pair(res.value),
                     "abs_err": _num(res.abs_err)}))
    else:
        print(f"{format_complex(res.value)}  (abs_err {res.abs_err:.3e})")
    return EXIT_OK


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--parallel", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="evaluate sweep points in N processes")
    common.add_argument("--sieve-limit", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="largest n covered by the divisor-sum sieve")
    parser = _Parser(prog="koshlab", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", parents=[common], help="list registered identities")

    p = sub.add_parser("verify", parents=[common], help="two-sided check at one point")
    p.add_argument("id")
    p.add_argument("params", nargs="*", metavar="name=value")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS)

    p = sub.add_parser("sweep", parents=[common], help="two-sided check over a grid")
    p.add_argument("id")
    p.add_argument("grid", nargs="*", metavar="name=start:stop:count")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS)

    p = sub.add_parser("eval", parents=[common], help="evaluate a primitive")
    p.add_argument("fn")
    p.add_argument("args", nargs="*")
    return parser


_DEFAULTS = {"json": False, "parallel": 1, "sieve_limit": None, "tol": None}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for k, v in _DEFAULTS.items():
            if not hasattr(args, k):
                setattr(args, k, v)
        if args.parallel < 1:
            raise UsageError("--parallel must be at least 1")
        if args.sieve_limit is not None:
            series.set_sieve_limit(args.sieve_limit)
        handler = {"list": cmd_list, "verify": cmd_verify, "sweep": cmd_sweep, "eval": cmd_eval}[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownNameError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNKNOWN
    except DomainError as exc:
        print(f"domain violation: {exc.predicate}", file=sys.stderr)
        return EXIT_DOMAIN
    except KoshlabError as exc:
        print(f"evaluation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
