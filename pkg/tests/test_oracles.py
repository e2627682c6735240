"""Cross-checks against a separate sympy implementation of the defining equations."""

import random
from itertools import product

import pytest
import sympy

from fcc.a0 import build_a0, linear_a0
from fcc.connection import solve_connection
from fcc.core import JordanSpec
from fcc.curvature import dual_structure, riemann
from fcc.hierarchy import generate, independence_det
from fcc.parse import parse_expr

from conftest import random_family, to_sympy


def sym_coords(n):
    return sympy.symbols(f"u1:{n + 1}")


def sym_c(blocks):
    """c[i][j][k] for the Jordan-block product, built from block labels."""
    labels = [(b, i) for b, m in enumerate(blocks) for i in range(m)]
    n = len(labels)
    return [[[int(labels[i][0] == labels[j][0] == labels[k][0] and labels[i][1] == labels[j][1] + labels[k][1])
              for k in range(n)] for j in range(n)] for i in range(n)]


def sym_connection(blocks, a0, u):
    n = len(u)
    c = sym_c(blocks)
    firsts = [sum(blocks[:b]) for b in range(len(blocks))]
    X = [u[i] - (a0 if i in firsts else 0) for i in range(n)]
    V = [[sum(c[i][j][k] * X[j] for j in range(n)) for k in range(n)] for i in range(n)]
    G = {}
    for i, j, k in product(range(n), repeat=3):
        key = (i, min(j, k), max(j, k))
        if key not in G:
            G[key] = sympy.Symbol(f"G_{key[0]}_{key[1]}_{key[2]}")

    def g(i, j, k):
        return G[(i, min(j, k), max(j, k))]

    eqs = []
    for k, i, j in product(range(n), repeat=3):
        if i < j:
            eqs.append(sympy.diff(V[k][j], u[i]) - sympy.diff(V[k][i], u[j])
                       + sum(g(k, i, s) * V[s][j] - g(k, j, s) * V[s][i] for s in range(n)))
    for i, j in product(range(n), repeat=2):
        eqs.append(sum(g(i, f, j) for f in firsts))
    unknowns = list(G.values())
    sol = sympy.solve(eqs, unknowns, dict=True)
    assert len(sol) == 1
    return {key: sympy.simplify(sol[0].get(s, s)) for key, s in G.items()}


def sym_riemann(Gd, u):
    n = len(u)

    def g(k, i, l):
        return Gd[(k, min(i, l), max(i, l))]

    return {(k, l, i, j): sympy.simplify(
        sympy.diff(g(k, i, l), u[j]) - sympy.diff(g(k, j, l), u[i])
        + sum(g(k, j, s) * g(s, i, l) - g(k, i, s) * g(s, j, l) for s in range(n)))
        for k, l, i, j in product(range(n), repeat=4) if i < j}


CASES = [
    ((2,), "u1*u2"),
    ((1, 1), "u1**2 + u2**3"),
    ((3,), None),
    ((2, 1), None),
    ((1, 1, 1), None),
]


def seed(blocks, text, index):
    spec = JordanSpec(blocks)
    if text is not None:
        return spec, parse_expr(text, spec.ring()).as_poly()
    return spec, build_a0(spec, random_family(spec, random.Random(index), degree=2, lo=-2, hi=2))


@pytest.mark.parametrize("index,case", list(enumerate(CASES)), ids=[str(c[0]) for c in CASES])
def test_connection_and_curvature_match_sympy(index, case):
    spec, a0 = seed(case[0], case[1], index)
    u = sym_coords(spec.n)
    expected = sym_connection(spec.block_sizes, to_sympy(a0), u)
    G = solve_connection(spec, a0)
    for key, value in expected.items():
        assert sympy.simplify(to_sympy(G[key]) - value) == 0, key
    R = riemann(G)
    for key, value in sym_riemann(expected, u).items():
        assert sympy.simplify(to_sympy(R[key]) - value) == 0, key


def test_example_connection_values():
    spec, a0 = seed((2,), "u1*u2", 0)
    expected = sym_connection((2,), to_sympy(a0), sym_coords(2))
    u1, u2 = sym_coords(2)
    assert expected[(0, 1, 1)] == u1 / u2
    assert expected[(1, 1, 1)] == -1
    assert sym_riemann(expected, (u1, u2))[(0, 1, 0, 1)] == -1 / u2


def test_dual_connection_matches_sympy_formula():
    spec = JordanSpec((2,))
    e1, e2 = sympy.symbols("e1 e2")
    u = sym_coords(2)
    a0 = e1 * u[0] + e2 * u[1]
    Gd = sym_connection((2,), a0, u)
    c = sym_c((2,))
    L = sympy.Matrix(2, 2, lambda i, k: sum(c[i][j][k] * u[j] for j in range(2)))
    Linv = L.inv()
    cstar = [[[sum(Linv[i, m] * c[m][j][k] for m in range(2)) for k in range(2)] for j in range(2)] for i in range(2)]

    def g(k, i, l):
        return Gd[(k, min(i, l), max(i, l))]

    nablaE = [[int(k == l) + sum(g(k, l, s) * u[s] for s in range(2)) for l in range(2)] for k in range(2)]
    ring = spec.ring(params=["e1", "e2"])
    Gs = dual_structure(spec, solve_connection(spec, linear_a0(spec, [ring.var("e1"), ring.var("e2")], ring)))
    for k, i, j in product(range(2), repeat=3):
        want = g(k, i, j) - sum(cstar[l][j][i] * nablaE[k][l] for l in range(2))
        assert sympy.simplify(to_sympy(Gs.gamma_star[k, i, j]) - want) == 0
    assert sympy.simplify(to_sympy(Gs.gamma_star[0, 1, 1]) - e2 / u[1]) == 0
    assert sympy.simplify(to_sympy(Gs.gamma_star[1, 1, 1]) + e1 / u[1]) == 0
    assert sympy.simplify(to_sympy(Gs.gamma_star[0, 0, 0]) - (e2 * u[1] - u[0]) / u[0] ** 2) == 0


def sym_potential(omega, u):
    t = sympy.Symbol("t")
    integrand = sum(w.subs({x: t * x for x in u}, simultaneous=True) * x for w, x in zip(omega, u))
    return sympy.expand(sympy.integrate(sympy.expand(integrand), (t, 0, 1)))


@pytest.mark.parametrize("blocks,text,expected", [
    ((1, 1), "u1 + u2", "-u1*u2"),
    ((2,), "u2", "u1*u2 - u2**2/2"),
])
def test_first_hierarchy_step_matches_sympy(blocks, text, expected):
    spec, a0 = seed(blocks, text, 0)
    u = sym_coords(spec.n)
    c = sym_c(blocks)
    L = [[sum(c[i][j][k] * u[j] for j in range(spec.n)) for k in range(spec.n)] for i in range(spec.n)]
    f = to_sympy(a0)
    omega = [sum(L[s][i] * sympy.diff(f, u[s]) for s in range(spec.n)) - f * sympy.diff(f, u[i])
             for i in range(spec.n)]
    oracle = sym_potential(omega, u)
    assert sympy.expand(oracle - sympy.sympify(expected)) == 0
    a1 = generate(spec, a0, 1).a[1]
    assert sympy.expand(to_sympy(a1) - oracle) == 0


@pytest.mark.parametrize("blocks", [(2,), (1, 1), (3,), (2, 1), (4,), (2, 2)], ids=str)
def test_independence_determinants_match_sympy(blocks):
    spec = JordanSpec(blocks)
    a0 = build_a0(spec, random_family(spec, random.Random(7), degree=2, lo=-2, hi=2))
    h = generate(spec, a0)
    dx, de = independence_det(h)
    Xs = sympy.Matrix([[to_sympy(h.X[k][i]) for k in range(spec.n)] for i in range(spec.n)])
    assert sympy.expand(Xs.det() - to_sympy(dx)) == 0
    assert sympy.expand(to_sympy(dx) - to_sympy(de)) == 0
