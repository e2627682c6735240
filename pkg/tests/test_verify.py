import dataclasses

import pytest

from fcc import verify
from fcc.a0 import build_a0, jet_ring, symbolic_functions
from fcc.connection import solve_connection
from fcc.core import JordanSpec
from fcc.parse import ParseError, parse_expr
from fcc.tables import CASES, ERRATA, Chain, Erratum
from fcc.verify import check_metric_fixture, compare_table, first_failure, verify_case


def gamma_setup(case_id):
    spec = JordanSpec(CASES[case_id].blocks)
    ring = jet_ring(spec, order=verify.JET_ORDER)
    a0 = build_a0(spec, symbolic_functions(spec, ring), ring)
    env = {f"d{k + 1}": a0.diff(k) for k in range(spec.n)}
    return spec, ring, a0, solve_connection(spec, a0), env


def test_parse_expr():
    ring = JordanSpec((2,)).ring(params=["e1"])
    assert parse_expr("u1^2 - 2*u1*e1/3", ring) == parse_expr("u1**2 - (2/3)*e1*u1", ring)
    for bad in ["u1 +", "0.5*u1", "u1^u2", "u1^(1/2)", "x9", "1/(u1 - u1)", "f(u1)"]:
        with pytest.raises(ParseError):
            parse_expr(bad, ring)


@pytest.mark.parametrize("case_id", list(CASES))
def test_case_passes(case_id):
    report = verify_case(case_id)
    assert report["passed"], first_failure(report)
    assert first_failure(report) is None
    assert report["gamma"]["solver_verified"]
    assert report["dual"]["dual_flat"] and report["dual"]["euler_flat"]
    assert report["metric"]["identity_fails_bridge"]


def test_errata_counts():
    assert sum(len(v) for v in ERRATA.values()) == 36
    assert not ERRATA.get("2") and not ERRATA.get("3")


def test_two_block_example_entries():
    spec, ring, a0, G, env = gamma_setup("22")
    assert G[0, 1, 1] == parse_expr("d2/u2", ring, env)
    assert len(CASES["22"].dual) == 24
    assert sum(len(chain.links) for chain in CASES["22"].dual) == 31


def test_tampered_entry_is_reported():
    spec, ring, a0, G, env = gamma_setup("2")
    chains = list(CASES["2"].gamma)
    chains[0] = Chain.of("-d2/u2", "1,2,2")
    out = compare_table(chains, G, ring, env, {})
    assert not out["ok"]
    assert out["mismatches"][0]["symbol"] == "1,2,2"


def test_missing_entry_is_reported():
    spec, ring, a0, G, env = gamma_setup("3")
    chains = [ch for ch in CASES["3"].gamma if all(label != "2,3,3" for _, label in ch.links)]
    out = compare_table(chains, G, ring, env, {})
    assert not out["ok"]
    assert any(m["printed"] == "0" for m in out["mismatches"])


def test_unneeded_erratum_is_stale():
    spec, ring, a0, G, env = gamma_setup("2")
    out = compare_table(CASES["2"].gamma, G, ring, env, {(0, 1, 1): parse_expr("d2/u2", ring, env)})
    assert out["stale_errata"] == ["1,2,2"] and not out["ok"]


def test_wrong_correction_is_not_accepted():
    spec, ring, a0, G, env = gamma_setup("4")
    fixed = {verify._key(e.key): parse_expr(e.corrected, ring, env)
             for e in ERRATA["4"] if e.table == "gamma"}
    assert compare_table(CASES["4"].gamma, G, ring, env, fixed)["ok"]
    bogus = {k: v + 1 for k, v in fixed.items()}
    out = compare_table(CASES["4"].gamma, G, ring, env, bogus)
    assert out["mismatches"] and out["stale_errata"]


def test_erratum_that_satisfies_the_equations_is_not_refuted():
    # A printed value equal to the computed one cannot be refuted by the equations.
    spec, ring, a0, G, env = gamma_setup("2")
    assert not verify._connection_fails(spec, a0, G, (0, 1, 1), G[0, 1, 1])
    assert verify._connection_fails(spec, a0, G, (0, 1, 1), G[0, 1, 1] + 1)


def test_removing_errata_makes_the_case_fail(monkeypatch):
    monkeypatch.setitem(ERRATA, "21", ())
    report = verify_case("21")
    assert not report["passed"]
    assert "case 21" in first_failure(report)


def test_stale_erratum_makes_the_case_fail(monkeypatch):
    extra = Erratum("gamma", "1,2,2", "d2/u2", "not actually wrong")
    monkeypatch.setitem(ERRATA, "2", (extra,))
    report = verify_case("2")
    assert not report["passed"]
    assert "1,2,2" in first_failure(report)


def test_metric_fixture_with_wrong_entry_fails():
    case = CASES["2"]
    entries = {k: v + " + u1" for k, v in case.metric.entries.items()}
    broken = dataclasses.replace(case, metric=dataclasses.replace(case.metric, entries=entries))
    assert not check_metric_fixture(broken)["ok"]
    assert check_metric_fixture(case)["ok"]


def test_unknown_case():
    with pytest.raises(KeyError):
        verify_case("5")
