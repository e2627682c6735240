"""Command-line interface: ``fcc gen-a0``, ``fcc check`` and ``fcc verify-paper``.

A spec file is a JSON object::

    {"blocks": [2, 1],
     "F": [[[0, 1], [0]], [[0, 0, 1]]],     # or {"blocks": ...}; coefficient arrays per function
     "epsilon": [1, 1],                     # alternative: linear a0
     "a0": "u2^2",                          # alternative: raw expression (negative tests)
     "params": ["k"],                       # optional symbolic constants usable in a0 / metric
     "depth": 3,                            # optional hierarchy depth
     "metric": [["0", "u2"], ["u2", "0"]]}  # optional, for --metric

Exactly one of ``F``, ``epsilon`` and ``a0`` must be given.  Exit codes:
0 every requested check passed, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .a0 import A0Family, build_a0, check_master, linear_a0
from .connection import ScheduleError, solve_connection, verify_connection
from .core import JordanSpec, canonical_c
from .curvature import check_3RC, dual_structure, is_flat, metric_checks, riemann
from .hierarchy import SeedError, check_commutation, generate, independence_det
from .parse import ParseError, parse_expr
from .poly import Q
from .ratexpr import PoleError
from .tables import CASES


class InputError(Exception):
    pass


def _label(idx) -> str:
    return ",".join(str(i + 1) for i in idx)


def load_spec_file(path: str) -> dict:
    """Read and validate a spec file; returns ``{"spec", "ring", "a0", "depth", "metric", ...}``."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    unknown = set(data) - {"blocks", "F", "epsilon", "a0", "params", "depth", "metric"}
    if unknown:
        raise InputError(f"{path}: unknown keys {sorted(unknown)}")
    try:
        blocks = data["blocks"]
        if not isinstance(blocks, list):
            raise InputError("'blocks' must be a list of positive integers")
        spec = JordanSpec(tuple(blocks))
    except KeyError:
        raise InputError(f"{path}: missing 'blocks'") from None
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None

    given = [k for k in ("F", "epsilon", "a0") if k in data]
    if len(given) != 1:
        raise InputError(f"{path}: exactly one of 'F', 'epsilon', 'a0' is required, got {given or 'none'}")
    params = data.get("params", [])
    if not isinstance(params, list) or not all(isinstance(p, str) and p.isidentifier() for p in params):
        raise InputError("'params' must be a list of identifiers")
    ring = spec.ring(params=params)
    source = given[0]
    try:
        if source == "F":
            fam = data["F"]
            fam = fam["blocks"] if isinstance(fam, dict) else fam
            family = A0Family(fam)
            a0 = build_a0(spec, family, ring)
        elif source == "epsilon":
            eps = data["epsilon"]
            if not isinstance(eps, list):
                raise InputError("'epsilon' must be a list")
            a0 = linear_a0(spec, [Q(e) for e in eps], ring)
        else:
            expr = parse_expr(data["a0"], ring)
            if not expr.is_polynomial():
                raise InputError("'a0' must be a polynomial")
            a0 = expr.as_poly()
    except (TypeError, ValueError, KeyError) as exc:
        raise InputError(f"{path}: invalid {source!r}: {exc}") from None

    depth = data.get("depth")
    if depth is not None and (not isinstance(depth, int) or isinstance(depth, bool) or depth < 0):
        raise InputError("'depth' must be a non-negative integer")
    metric = None
    if "metric" in data:
        rows = data["metric"]
        n = spec.n
        if not (isinstance(rows, list) and len(rows) == n and all(isinstance(r, list) and len(r) == n for r in rows)):
            raise InputError(f"'metric' must be a {n}x{n} array of expressions")
        try:
            metric = [[parse_expr(str(x), ring) for x in r] for r in rows]
        except ParseError as exc:
            raise InputError(f"'metric': {exc}") from None
        if any(metric[i][j] != metric[j][i] for i in range(n) for j in range(i + 1, n)):
            raise InputError("'metric' must be symmetric")
    return {"spec": spec, "ring": ring, "a0": a0, "source": source, "depth": depth, "metric": metric}


# ------------------------------------------------------------------ commands

def cmd_gen_a0(args) -> tuple:
    loaded = load_spec_file(args.spec)
    return 0, {"blocks": list(loaded["spec"].block_sizes), "a0": str(loaded["a0"])}


def cmd_check(args) -> tuple:
    loaded = load_spec_file(args.spec)
    spec, a0 = loaded["spec"], loaded["a0"]
    wanted = {k for k in ("master", "connection", "curvature", "dual", "metric") if getattr(args, k)}
    run_hierarchy = args.hierarchy is not None
    if not wanted and not run_hierarchy:
        wanted = {"master", "connection", "curvature"}
    if "metric" in wanted and loaded["metric"] is None:
        raise InputError("--metric needs a 'metric' entry in the spec file")

    report = {"blocks": list(spec.block_sizes), "a0": str(a0)}
    ok = True

    if "master" in wanted:
        res = check_master(spec, a0)
        report["master"] = not res
        report["master_residuals"] = {_label(k): str(v) for k, v in sorted(res.items())}
        ok &= not res

    G = None
    if wanted & {"connection", "curvature", "dual", "metric"}:
        try:
            G = solve_connection(spec, a0)
        except (ScheduleError, PoleError, ZeroDivisionError) as exc:
            report["connection_error"] = str(exc)
            ok = False

    if "connection" in wanted and G is not None:
        v = verify_connection(spec, a0, G)
        for key in ("torsionless", "flat_unit", "dnabla_zero"):
            report[key] = v[key]
            ok &= v[key]
        report["connection"] = G.to_json()
        report["connection_violations"] = {k: [_label(t) for t in ts] for k, ts in v["violations"].items()}

    if "curvature" in wanted and G is not None:
        R = riemann(G)
        res = check_3RC(R, canonical_c(spec))
        report["cond_3RC"] = not res
        report["cond_3RC_residuals"] = {_label(k): str(v) for k, v in sorted(res.items())}
        report["flat"] = is_flat(R)
        report["riemann"] = {_label(k): str(v) for k, v in sorted(R.nonzero().items())}
        ok &= not res

    if "dual" in wanted and G is not None:
        Gs = dual_structure(spec, G).gamma_star
        Rs = riemann(Gs)
        report["dual_flat"] = is_flat(Rs)
        report["dual_flat_status"] = "conjecture verification"
        report["dual_connection"] = Gs.to_json()
        ok &= report["dual_flat"]

    if "metric" in wanted and G is not None:
        m = metric_checks(spec, loaded["metric"], G)
        report["metric"] = {k: m[k] for k in ("invariant", "killing", "bridge")}
        report["metric_violations"] = {k: [_label(t) for t in ts] for k, ts in m["violations"].items()}
        ok &= m["invariant"] and m["killing"] and m["bridge"]

    if run_hierarchy:
        depth = args.hierarchy if args.hierarchy >= 0 else loaded["depth"]
        try:
            h = generate(spec, a0, depth)
        except SeedError as exc:
            report["hierarchy"] = {"error": str(exc)}
            ok = False
        else:
            comm = {}
            for i in range(len(h.V)):
                for j in range(i + 1, len(h.V)):
                    res = check_commutation(h.V[i], h.V[j])
                    if res:
                        comm[f"{i},{j}"] = sorted(f"{k[0]}:{_label(k[1:])}" for k in res)
            hr = {
                "a": [str(x) for x in h.a],
                "X": [[str(x) for x in Xk] for Xk in h.X],
                "commuting": not comm,
                "commutation_failures": comm,
            }
            ok &= not comm
            if h.depth >= spec.n - 1:
                dx, de = independence_det(h)
                hr["independent"] = (dx - de).is_zero() and not dx.is_zero()
                hr["det_X"] = str(dx)
                ok &= hr["independent"]
            report["hierarchy"] = hr

    report["passed"] = bool(ok)
    return (0 if ok else 1), report


def cmd_verify_paper(args) -> tuple:
    ids = args.case or list(CASES)
    for cid in ids:
        if cid not in CASES:
            raise InputError(f"unknown case {cid!r}; choose from {', '.join(CASES)}")
    reports = {cid: verify.verify_case(cid) for cid in ids}
    failures = [verify.first_failure(r) for r in reports.values() if not r["passed"]]
    summary = {
        "cases": reports,
        "passed": sum(r["passed"] for r in reports.values()),
        "total": len(reports),
        "errata": sum(len(r[t]["errata"]) for r in reports.values() for t in ("gamma", "dual")),
    }
    if failures:
        summary["first_failure"] = failures[0]
    return (0 if not failures else 1), summary


# ------------------------------------------------------------------ output

def _text(command: str, report: dict) -> str:
    if command == "verify-paper":
        lines = []
        for cid, r in report["cases"].items():
            g, d = r["gamma"], r["dual"]
            lines.append(
                f"case {cid:<4} {'PASS' if r['passed'] else 'FAIL'}  a0 {'ok' if r['a0']['ok'] else 'MISMATCH'}"
                f"  gamma {g['matched']} exact + {len(g['errata'])} errata"
                f"  dual {d['matched']} exact + {len(d['errata'])} errata, flat={d['dual_flat']}"
                f"  metric {'ok' if r['metric']['ok'] else 'FAIL'}")
        lines.append(f"{report['passed']}/{report['total']} cases pass ({report['errata']} documented errata)")
        if "first_failure" in report:
            lines.append(f"first failure: {report['first_failure']}")
        return "\n".join(lines) + "\n"
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            if not value:
                lines.append(f"{prefix}: {{}}")
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            for i, v in enumerate(value):
                walk(f"{prefix}[{i}]", v)
        else:
            lines.append(f"{prefix}: {json.dumps(value) if not isinstance(value, str) else value}")

    walk("", report)
    return "\n".join(lines) + "\n"


def render(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return _text(command, report)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", metavar="FILE", help="write the report to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="fcc", description="Regular F-manifolds in canonical coordinates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-a0", parents=[common], help="print the seed a0 defined by a spec file")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.set_defaults(func=cmd_gen_a0)

    p = sub.add_parser("check", parents=[common], help="run verification checks on a spec file")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--master", action="store_true", help="master equation residual")
    p.add_argument("--connection", action="store_true", help="solve and verify the compatible connection")
    p.add_argument("--curvature", action="store_true", help="Riemann tensor, 3RC condition and flatness")
    p.add_argument("--hierarchy", nargs="?", type=int, const=-1, default=None, metavar="K",
                   help="hierarchy to depth K (default: the file's depth or n-1)")
    p.add_argument("--dual", action="store_true", help="flatness of the dual connection")
    p.add_argument("--metric", action="store_true", help="invariance, Killing and bridge checks")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify-paper", parents=[common], help="regress the reference tables")
    p.add_argument("--case", action="append", metavar="ID", help=f"one of {', '.join(CASES)}; repeatable")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        code, report = args.func(args)
    except InputError as exc:
        print(f"fcc: error: {exc}", file=sys.stderr)
        return 2
    text = render(args.command, report, args.format)
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"fcc: error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    if code == 1 and report.get("first_failure"):
        print(f"fcc: {report['first_failure']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
