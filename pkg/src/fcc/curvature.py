"""Curvature of a connection, compatibility with the product, duality and metrics.

The Riemann tensor is

    R^k_{lij} = d_j G^k_{il} - d_i G^k_{jl} + G^k_{js} G^s_{il} - G^k_{is} G^s_{jl}

and is stored as ``R[k][l][i][j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .connection import Connection
from .core import CTensor, JordanSpec, canonical_c, invert, mult_operator
from .ratexpr import RationalExpr, lift


def _dense(G):
    return G.dense() if isinstance(G, Connection) else G


class RiemannTensor:
    def __init__(self, components: list):
        self.components = components
        self.n = len(components)

    def __getitem__(self, klij) -> RationalExpr:
        k, l, i, j = klij
        return self.components[k][l][i][j]

    def nonzero(self) -> dict:
        """Nonzero components with ``i < j`` (the rest follow by antisymmetry)."""
        n = self.n
        return {(k, l, i, j): self.components[k][l][i][j]
                for k, l, i in product(range(n), repeat=3) for j in range(i + 1, n)
                if not self.components[k][l][i][j].is_zero()}

    def is_antisymmetric(self) -> bool:
        n = self.n
        return all((self.components[k][l][i][j] + self.components[k][l][j][i]).is_zero()
                   for k, l, i, j in product(range(n), repeat=4))


def riemann(G) -> RiemannTensor:
    Gd = _dense(G)
    n = len(Gd)
    z = Gd[0][0][0] * 0
    dG = [[[[Gd[k][i][l].diff(j) for j in range(n)] for l in range(n)] for i in range(n)] for k in range(n)]
    R = [[[[z] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for k, l in product(range(n), repeat=2):
        for i in range(n):
            for j in range(i + 1, n):
                acc = dG[k][i][l][j] - dG[k][j][l][i]
                for s in range(n):
                    a, b = Gd[k][j][s], Gd[s][i][l]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                    a, b = Gd[k][i][s], Gd[s][j][l]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc - a * b
                R[k][l][i][j] = acc
                R[k][l][j][i] = -acc
    return RiemannTensor(R)


def check_3RC(R: RiemannTensor, c: CTensor) -> dict:
    """Nonzero ``R^j_{skl} c^s_{mi} + R^j_{smk} c^s_{li} + R^j_{slm} c^s_{ki}``.

    Keys are 0-based ``(j, k, l, m, i)``.
    """
    n = R.n
    if c.n != n:
        raise ValueError("dimension mismatch")
    ring_zero = R.components[0][0][0][0] * 0
    by_lower = {}
    for (s, a, b), v in c.items():
        by_lower.setdefault((a, b), []).append((s, v))
    out = {}
    for j, k, l, m, i in product(range(n), repeat=5):
        acc = ring_zero
        for (p, q), (x, y) in (((k, l), (m, i)), ((m, k), (l, i)), ((l, m), (k, i))):
            for s, v in by_lower.get((x, y), ()):
                r = R.components[j][s][p][q]
                if not r.is_zero():
                    acc = acc + r * v
        if not acc.is_zero():
            out[(j, k, l, m, i)] = acc
    return out


def is_flat(R: RiemannTensor) -> bool:
    return not R.nonzero()


def e_flatness_residual(G, spec: JordanSpec) -> dict:
    """Nonzero ``e(G^i_{jk}) = sum_sigma d_{1(sigma)} G^i_{jk}`` keyed by ``(i, j, k)``, ``j <= k``."""
    Gd = _dense(G)
    n = len(Gd)
    out = {}
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                acc = Gd[i][j][k] * 0
                for off in spec.offsets:
                    acc = acc + Gd[i][j][k].diff(off)
                if not acc.is_zero():
                    out[(i, j, k)] = acc
    return out


@dataclass
class DualStructure:
    cstar: list
    gamma_star: Connection


def dual_structure(spec: JordanSpec, G) -> DualStructure:
    """Dual product ``c* = L^{-1} c`` and ``G*^k_{ij} = G^k_{ij} - c*^l_{ji} nabla_l E^k``.

    Here ``nabla_l E^k = delta^k_l + G^k_{ls} E^s``.
    """
    Gd = _dense(G)
    n = spec.n
    ring = Gd[0][0][0].ring
    c = canonical_c(spec)
    E = [lift(ring.coord(i), ring) for i in range(n)]
    Linv = invert(mult_operator(E, c))
    z = lift(0, ring)
    cstar = [[[z] * n for _ in range(n)] for _ in range(n)]
    for (m, j, k), v in c.items():
        for i in range(n):
            if not Linv[i][m].is_zero():
                cstar[i][j][k] = cstar[i][j][k] + Linv[i][m] * v
    nablaE = [[lift(1 if k == l else 0, ring) for l in range(n)] for k in range(n)]
    for k, l, s in product(range(n), repeat=3):
        if not Gd[k][l][s].is_zero():
            nablaE[k][l] = nablaE[k][l] + Gd[k][l][s] * E[s]
    symbols = {}
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                acc = Gd[k][i][j]
                for l in range(n):
                    if not cstar[l][j][i].is_zero() and not nablaE[k][l].is_zero():
                        acc = acc - cstar[l][j][i] * nablaE[k][l]
                symbols[(k, i, j)] = acc
    return DualStructure(cstar, Connection(n, ring, symbols))


def metric_checks(spec: JordanSpec, g: list, G) -> dict:
    """Invariance, Killing and bridge conditions for a metric ``g`` (matrix of expressions)."""
    Gd = _dense(G)
    n = spec.n
    ring = Gd[0][0][0].ring
    g = [[lift(x, ring) for x in row] for row in g]
    c = canonical_c(spec)
    z = lift(0, ring)
    if any(g[i][j] != g[j][i] for i in range(n) for j in range(i + 1, n)):
        raise ValueError("metric must be symmetric")

    def gc(i, j, k):
        acc = z
        for l in range(n):
            if c[l, j, k]:
                acc = acc + g[i][l] * c[l, j, k]
        return acc

    invariant = [(i, j, k) for i, j, k in product(range(n), repeat=3) if i < j and gc(i, j, k) != gc(j, i, k)]

    killing = []
    for i in range(n):
        for j in range(i, n):
            if not sum((g[i][j].diff(off) for off in spec.offsets), z).is_zero():
                killing.append((i, j))

    dg = [[[g[i][j].diff(k) for k in range(n)] for j in range(n)] for i in range(n)]
    e = list(spec.offsets)
    bridge = []
    for k in range(n):
        for i in range(n):
            for j in range(i, n):
                lhs = dg[i][j][k]
                for s in range(n):
                    lhs = lhs - Gd[s][i][k] * g[s][j] - Gd[s][j][k] * g[s][i]
                rhs = z
                for m in e:
                    for s in range(n):
                        if c[s, i, k]:
                            rhs = rhs + (dg[m][j][s] - dg[m][s][j]) * c[s, i, k]
                        if c[s, j, k]:
                            rhs = rhs + (dg[m][i][s] - dg[m][s][i]) * c[s, j, k]
                if not (lhs - rhs / 2).is_zero():
                    bridge.append((k, i, j))
    return {
        "invariant": not invariant,
        "killing": not killing,
        "bridge": not bridge,
        "violations": {"invariant": invariant, "killing": killing, "bridge": bridge},
    }
