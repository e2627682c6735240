"""Regression of the reference tables against freshly computed structures.

For every case the runner

* builds ``a0`` from symbolic jets and compares it with the printed general solution;
* solves for the connection and compares it symbol by symbol with the printed table;
* builds the dual connection for ``a0 = e1*u1 + ... + en*un`` and compares it likewise,
  then checks that its curvature vanishes;
* checks every metric fixture at each parameter instantiation, plus the identity
  metric as a negative control.

A printed value that disagrees with the computed one is accepted only if it is
listed in :data:`fcc.tables.ERRATA`, the listed correction equals the computed
value, and the printed value demonstrably violates the defining equations
(for the connection: torsion, flat unit or ``d_nabla``; for the dual: ``nabla* E = 0``
and flatness).
"""

from __future__ import annotations

from .a0 import build_a0, jet_ring, linear_a0, symbolic_functions
from .connection import Connection, solve_connection, verify_connection
from .core import JordanSpec
from .curvature import dual_structure, is_flat, metric_checks, riemann
from .parse import parse_expr
from .poly import Q
from .ratexpr import lift
from .tables import CASES, ERRATA, Case

JET_ORDER = 3


def _key(label: str) -> tuple:
    i, j, k = (int(x) - 1 for x in label.split(","))
    return (i, min(j, k), max(j, k))


def _label(key: tuple) -> str:
    return ",".join(str(x + 1) for x in key)


def compare_table(chains, computed: Connection, ring, env: dict, errata: dict) -> dict:
    """Compare printed chains with ``computed``.

    ``errata`` maps 0-based keys to corrected expressions.  Returns counts of
    exact matches, the errata that were needed (with the printed value), any
    unexplained mismatches, and errata that turned out to be unnecessary or wrong.
    """
    matched = 0
    used = {}
    mismatches = []
    listed = set()

    def judge(key, printed):
        nonlocal matched
        got = computed[key]
        if printed == got:
            matched += 1
            return
        fix = errata.get(key)
        if fix is not None and fix == got:
            used.setdefault(key, []).append(printed)
        else:
            mismatches.append({"symbol": _label(key), "printed": str(printed), "computed": str(got)})

    for chain in chains:
        value = parse_expr(chain.value, ring, env)
        for coef, label in chain.links:
            key = _key(label)
            listed.add(key)
            judge(key, value / parse_expr(coef, ring, env))
    for key in sorted(computed.nonzero()):
        if key not in listed:
            judge(key, lift(0, ring))
    stale = sorted(_label(k) for k in errata if k not in used)
    return {
        "matched": matched,
        "errata": {_label(k): [str(p) for p in v] for k, v in sorted(used.items())},
        "mismatches": mismatches,
        "stale_errata": stale,
        "ok": not mismatches and not stale,
    }


def _errata_for(case_id: str, table: str, ring, env: dict) -> dict:
    return {_key(e.key): parse_expr(e.corrected, ring, env)
            for e in ERRATA.get(case_id, ()) if e.table == table}


def _connection_fails(spec, a0, G: Connection, key, printed) -> bool:
    report = verify_connection(spec, a0, G.perturbed(key, printed - G[key]))
    return not (report["torsionless"] and report["flat_unit"] and report["dnabla_zero"])


def _dual_unit_residual(spec, Gs: Connection) -> list:
    """Nonzero ``delta^k_j + Gs^k_{js} E^s``: the Euler field must be flat for the dual."""
    n = spec.n
    ring = Gs.ring
    E = [lift(ring.coord(i), ring) for i in range(n)]
    out = []
    for k in range(n):
        for j in range(n):
            acc = lift(1 if k == j else 0, ring)
            for s in range(n):
                acc = acc + Gs[k, j, s] * E[s]
            if not acc.is_zero():
                out.append((k, j))
    return out


def _metric_ring(spec: JordanSpec, fixture):
    jets = [(name, coord - 1, 4) for name, coord in fixture.functions]
    return spec.ring(params=fixture.params, jets=jets)


def metric_matrix(spec: JordanSpec, fixture, instance: dict, ring=None) -> list:
    ring = ring or _metric_ring(spec, fixture)
    env = {f"e{k}": lift(Q(v), ring) for k, v in instance.items()}
    n = spec.n
    g = [[lift(0, ring)] * n for _ in range(n)]
    for label, text in fixture.entries.items():
        i, j = (int(x) - 1 for x in label.split(","))
        g[i][j] = g[j][i] = parse_expr(text, ring, env)
    return g


def metric_seed(spec: JordanSpec, instance: dict, ring):
    """``a0 = sum eps_alpha u^{1(alpha)}`` for a metric fixture."""
    return sum((ring.coord(k - 1).scale(Q(v)) for k, v in instance.items()), ring.zero())


def check_metric_fixture(case: Case) -> dict:
    spec = JordanSpec(case.blocks)
    fixture = case.metric
    ring = _metric_ring(spec, fixture)
    out = []
    for instance in fixture.instances:
        G = solve_connection(spec, metric_seed(spec, instance, ring))
        r = metric_checks(spec, metric_matrix(spec, fixture, instance, ring), G)
        out.append({"epsilon": {str(k): str(Q(v)) for k, v in sorted(instance.items())},
                    "invariant": r["invariant"], "killing": r["killing"], "bridge": r["bridge"]})
    first = fixture.instances[0]
    G = solve_connection(spec, metric_seed(spec, first, ring))
    ident = [[lift(1 if i == j else 0, ring) for j in range(spec.n)] for i in range(spec.n)]
    control = metric_checks(spec, ident, G)
    return {"instances": out, "identity_fails_bridge": not control["bridge"],
            "ok": all(x["invariant"] and x["killing"] and x["bridge"] for x in out) and not control["bridge"]}


def verify_case(case_id: str) -> dict:
    """Full comparison for one case; ``report["passed"]`` summarises it."""
    if case_id not in CASES:
        raise KeyError(f"unknown case {case_id!r}; choose from {', '.join(CASES)}")
    case = CASES[case_id]
    spec = JordanSpec(case.blocks)
    n = spec.n
    report = {"case": case_id, "blocks": list(case.blocks)}

    ring = jet_ring(spec, order=JET_ORDER)
    a0 = build_a0(spec, symbolic_functions(spec, ring), ring)
    report["a0"] = {"ok": parse_expr(case.a0, ring) == lift(a0, ring), "computed": str(a0)}

    G = solve_connection(spec, a0)
    checks = verify_connection(spec, a0, G)
    env = {f"d{k + 1}": a0.diff(k) for k in range(n)}
    gamma = compare_table(case.gamma, G, ring, env, _errata_for(case_id, "gamma", ring, env))
    gamma["solver_verified"] = checks["torsionless"] and checks["flat_unit"] and checks["dnabla_zero"]
    refuted = []
    for label, printed in gamma["errata"].items():
        key = _key(label)
        refuted.append(all(_connection_fails(spec, a0, G, key, parse_expr(p, ring, env)) for p in printed))
    gamma["errata_refuted"] = all(refuted)
    gamma["ok"] = gamma["ok"] and gamma["solver_verified"] and gamma["errata_refuted"]
    report["gamma"] = gamma

    names = [f"e{i + 1}" for i in range(n)]
    dring = spec.ring(params=names)
    seed = linear_a0(spec, [dring.var(p) for p in names], dring)
    Gs = dual_structure(spec, solve_connection(spec, seed)).gamma_star
    dual = compare_table(case.dual, Gs, dring, {}, _errata_for(case_id, "dual", dring, {}))
    dual["euler_flat"] = not _dual_unit_residual(spec, Gs)
    refuted = []
    for label, printed in dual["errata"].items():
        key = _key(label)
        for p in printed:
            wrong = Gs.perturbed(key, parse_expr(p, dring) - Gs[key])
            refuted.append(bool(_dual_unit_residual(spec, wrong)) and not is_flat(riemann(wrong)))
    dual["errata_refuted"] = all(refuted)
    dual["dual_flat"] = is_flat(riemann(Gs))
    dual["ok"] = dual["ok"] and dual["euler_flat"] and dual["errata_refuted"] and dual["dual_flat"]
    report["dual"] = dual

    report["metric"] = check_metric_fixture(case)
    report["passed"] = report["a0"]["ok"] and gamma["ok"] and dual["ok"] and report["metric"]["ok"]
    return report


def first_failure(report: dict) -> str | None:
    """A one-line description of the first problem in a case report."""
    if not report["a0"]["ok"]:
        return f"case {report['case']}: a0 differs from the printed general solution ({report['a0']['computed']})"
    for table in ("gamma", "dual"):
        t = report[table]
        if t["mismatches"]:
            m = t["mismatches"][0]
            return (f"case {report['case']} {table} {m['symbol']}: "
                    f"printed {m['printed']} vs computed {m['computed']}")
        if t["stale_errata"]:
            return f"case {report['case']} {table}: erratum not needed or wrong at {t['stale_errata'][0]}"
        if not t["errata_refuted"]:
            return f"case {report['case']} {table}: a listed erratum does not violate the defining equations"
    if not report["gamma"]["solver_verified"]:
        return f"case {report['case']}: computed connection fails its defining equations"
    if not report["dual"]["euler_flat"] or not report["dual"]["dual_flat"]:
        return f"case {report['case']}: dual connection is not flat"
    if not report["metric"]["ok"]:
        return f"case {report['case']}: metric fixture check failed"
    return None
