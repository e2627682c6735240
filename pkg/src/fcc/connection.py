"""The torsionless connection with flat unit satisfying ``d_nabla((E - a0 e) o) = 0``.

In canonical coordinates write ``I = i(alpha)``, ``J = j(beta)``, ``K = k(gamma)``
and ``X = E - a0 e``.  The component ``(I; J, K)`` of ``d_nabla(X o)`` reads

    delta^alpha_gamma d_J X^{(i-k+1)(alpha)} - delta^alpha_beta d_K X^{(i-j+1)(alpha)}
      + sum_{s >= k in gamma} Gamma^I_{J s} X^{(s-k+1)(gamma)}
      - sum_{s >= j in beta}  Gamma^I_{K s} X^{(s-j+1)(beta)}

where ``X^{p(alpha)} = u^{p(alpha)} - delta_{p1} a0``.  For a fixed upper index
these equations, together with ``sum_sigma Gamma^I_{1(sigma) J} = 0``, can be
solved one symbol at a time:

a. both lower indices outside the block of ``I``, in different blocks: zero;
b. one lower index in the block of ``I``, one outside: divide by
   ``X^{1(alpha)} - X^{1(beta)}``, lower indices descending;
   then the flat unit fixes every symbol with a lower index ``1(beta)`` and
   the other lower index in block ``beta``;
c/d. both lower indices ``>= 2`` in one block ``beta``: divide by
   ``-X^{2(beta)}``, largest index first.

:func:`solve_connection` follows that schedule; :func:`solve_connection_linear`
solves the same equations as a dense linear system and serves as a check.
"""

from __future__ import annotations

from itertools import product

from .core import JordanSpec, canonical_c, mult_operator, CTensor
from .poly import Polynomial
from .ratexpr import RationalExpr, lift


class ScheduleError(RuntimeError):
    """An equation referenced a symbol that the schedule had not fixed yet."""


def _pair(j: int, k: int) -> tuple:
    return (j, k) if j <= k else (k, j)


class Connection:
    """Symmetric Christoffel symbols ``Gamma^i_{jk}`` (0-based indices)."""

    def __init__(self, n: int, ring, symbols: dict | None = None):
        self.n = n
        self.ring = ring
        self._zero = lift(0, ring)
        self.symbols = {}
        for (i, j, k), v in (symbols or {}).items():
            v = lift(v, ring)
            if not v.is_zero():
                self.symbols[(i,) + _pair(j, k)] = v

    def __getitem__(self, ijk) -> RationalExpr:
        i, j, k = ijk
        return self.symbols.get((i,) + _pair(j, k), self._zero)

    def dense(self) -> list:
        """``G[i][j][k]`` as a nested list."""
        n = self.n
        return [[[self[i, j, k] for k in range(n)] for j in range(n)] for i in range(n)]

    def nonzero(self) -> dict:
        return dict(self.symbols)

    def perturbed(self, ijk, delta) -> "Connection":
        i, j, k = ijk
        out = dict(self.symbols)
        key = (i,) + _pair(j, k)
        out[key] = out.get(key, self._zero) + lift(delta, self.ring)
        return Connection(self.n, self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, Connection) or self.n != other.n:
            return NotImplemented
        keys = set(self.symbols) | set(other.symbols)
        return all(self.symbols.get(k, self._zero) == other.symbols.get(k, other._zero) for k in keys)

    __hash__ = None

    def differences(self, other: "Connection") -> list:
        """0-based ``(i, j, k)`` keys (``j <= k``) where the two connections differ."""
        keys = sorted(set(self.symbols) | set(other.symbols))
        return [k for k in keys if self.symbols.get(k, self._zero) != other.symbols.get(k, other._zero)]

    def to_json(self) -> dict:
        """``{"i,j,k": expression}`` with 1-based labels, ``j <= k``, zeros omitted."""
        return {f"{i + 1},{j + 1},{k + 1}": str(v) for (i, j, k), v in sorted(self.symbols.items())}

    def __repr__(self):
        return f"Connection(n={self.n}, {len(self.symbols)} nonzero symbols)"


# ------------------------------------------------------- the equations

def _x_component(spec: JordanSpec, a0: Polynomial, block: int, p: int):
    """``X^{p(block)}`` with 1-based ``p``; zero for ``p <= 0``."""
    ring = a0.ring
    if p < 1:
        return None
    u = ring.coord(spec.flat(block, p - 1))
    return u - a0 if p == 1 else u


def _dx_component(spec: JordanSpec, da0: list, block: int, p: int, J: int):
    """``d_J X^{p(block)}`` as a polynomial, or ``None`` if it is zero."""
    if p < 1:
        return None
    ring = da0[0].ring
    out = ring.one() if J == spec.flat(block, p - 1) else ring.zero()
    if p == 1:
        out = out - da0[J]
    return out if out else None


def _equation(spec: JordanSpec, a0: Polynomial, da0: list, I: int, J: int, K: int):
    """Linear form of the ``(I; J, K)`` component: ``(const, {pair: coefficient})``."""
    alpha, i = spec.label(I)
    beta, j = spec.label(J)
    gamma, k = spec.label(K)
    ring = a0.ring
    const = ring.zero()
    if alpha == gamma:
        d = _dx_component(spec, da0, alpha, i - k + 1, J)
        if d is not None:
            const = const + d
    if alpha == beta:
        d = _dx_component(spec, da0, alpha, i - j + 1, K)
        if d is not None:
            const = const - d
    coeffs = {}
    for s in range(k, spec.block_sizes[gamma]):
        x = _x_component(spec, a0, gamma, s - k + 1)
        key = _pair(J, spec.flat(gamma, s))
        coeffs[key] = coeffs.get(key, ring.zero()) + x
    for s in range(j, spec.block_sizes[beta]):
        x = _x_component(spec, a0, beta, s - j + 1)
        key = _pair(K, spec.flat(beta, s))
        coeffs[key] = coeffs.get(key, ring.zero()) - x
    return const, {key: v for key, v in coeffs.items() if v}


def _solve_for(target, const, coeffs, known, where):
    """Solve ``const + sum coeffs * Gamma = 0`` for ``target``."""
    acc = lift(const, const.ring)
    for key, coef in coeffs.items():
        if key == target:
            continue
        if key not in known:
            raise ScheduleError(f"{where}: symbol {key} used before it was computed")
        g = known[key]
        if not g.is_zero():
            acc = acc + g * coef
    coef = coeffs.get(target)
    if coef is None:
        raise ScheduleError(f"{where}: target {target} does not occur")
    return -acc / coef


def _solve_upper(spec: JordanSpec, a0: Polynomial, da0: list, I: int) -> dict:
    ring = a0.ring
    zero = lift(0, ring)
    alpha, _ = spec.label(I)
    known = {}

    # a. lower indices in two different blocks, neither of them alpha
    for beta, gamma in product(range(spec.r), repeat=2):
        if beta < gamma and alpha not in (beta, gamma):
            for J in spec.block_indices(beta):
                for K in spec.block_indices(gamma):
                    known[_pair(J, K)] = zero

    # b. one lower index in alpha, the other in beta != alpha
    for beta in range(spec.r):
        if beta == alpha:
            continue
        for k in range(spec.block_sizes[alpha] - 1, -1, -1):
            K = spec.flat(alpha, k)
            for j in range(spec.block_sizes[beta] - 1, -1, -1):
                J = spec.flat(beta, j)
                const, coeffs = _equation(spec, a0, da0, I, J, K)
                known[_pair(J, K)] = _solve_for(_pair(J, K), const, coeffs, known, f"case b {I, J, K}")

    # flat unit: Gamma^I_{1(beta) j(beta)} = -sum_{sigma != beta} Gamma^I_{1(sigma) j(beta)}
    for beta in range(spec.r):
        first = spec.offsets[beta]
        for J in spec.block_indices(beta):
            acc = zero
            for sigma in range(spec.r):
                if sigma != beta:
                    key = _pair(spec.offsets[sigma], J)
                    if key not in known:
                        raise ScheduleError(f"flat unit: symbol {key} used before it was computed")
                    acc = acc - known[key]
            known[_pair(first, J)] = acc

    # c/d. both lower indices >= 2 in one block beta
    for beta in range(spec.r):
        m = spec.block_sizes[beta]
        for k in range(m - 1, 0, -1):
            K = spec.flat(beta, k)
            for t in range(k, 0, -1):
                T = spec.flat(beta, t)
                const, coeffs = _equation(spec, a0, da0, I, spec.flat(beta, t - 1), K)
                known[_pair(K, T)] = _solve_for(_pair(K, T), const, coeffs, known, f"case c/d {I, K, T}")
    return known


def solve_connection(spec: JordanSpec, a0: Polynomial) -> Connection:
    """Christoffel symbols of the unique compatible connection for the seed ``a0``."""
    if a0.ring.ncoords != spec.n:
        raise ValueError(f"a0 has {a0.ring.ncoords} coordinates, spec needs {spec.n}")
    da0 = [a0.diff(s) for s in range(spec.n)]
    symbols = {}
    for I in range(spec.n):
        for (J, K), v in _solve_upper(spec, a0, da0, I).items():
            symbols[(I, J, K)] = v
    return Connection(spec.n, a0.ring, symbols)


# ------------------------------------------------------- dense check

def _gauss_solve(rows: list, ncols: int) -> list:
    """Solve ``rows`` (each ``coefficients + [rhs]``) by elimination; unique solution only."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        best = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                if best is None or len(rows[i][col].num) < len(rows[best][col].num):
                    best = i
        if best is None:
            raise ArithmeticError("linear system is not uniquely solvable")
        rows[r], rows[best] = rows[best], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b if not b.is_zero() else a for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(rows)):
        if not rows[i][ncols].is_zero():
            raise ArithmeticError("linear system is inconsistent")
    return [rows[i][ncols] for i in range(ncols)]


def solve_connection_linear(spec: JordanSpec, a0: Polynomial) -> Connection:
    """Same connection from the full linear system ``d_nabla(X o) = 0``, ``nabla e = 0``.

    The equations are assembled from the generic ``d_nabla`` formula with
    ``V = X o`` and solved per upper index by Gaussian elimination over the
    rational-function field, with no use of the block structure.
    """
    ring = a0.ring
    n = spec.n
    c = canonical_c(spec)
    X = [lift(ring.coord(i), ring) for i in range(n)]
    for off in spec.offsets:
        X[off] = X[off] - a0
    V = mult_operator(X, c)
    dV = [[[V[i][j].diff(s) for s in range(n)] for j in range(n)] for i in range(n)]
    pairs = [(j, k) for j in range(n) for k in range(j, n)]
    col = {p: t for t, p in enumerate(pairs)}
    zero = lift(0, ring)
    symbols = {}
    for I in range(n):
        rows = []
        for J in range(n):
            for K in range(J + 1, n):
                row = [zero] * (len(pairs) + 1)
                for s in range(n):
                    row[col[_pair(J, s)]] = row[col[_pair(J, s)]] + V[s][K]
                    row[col[_pair(K, s)]] = row[col[_pair(K, s)]] - V[s][J]
                row[-1] = -(dV[I][K][J] - dV[I][J][K])
                rows.append(row)
        for J in range(n):
            row = [zero] * (len(pairs) + 1)
            for off in spec.offsets:
                row[col[_pair(off, J)]] = row[col[_pair(off, J)]] + 1
            rows.append(row)
        for p, v in zip(pairs, _gauss_solve(rows, len(pairs))):
            symbols[(I,) + p] = v
    return Connection(n, ring, symbols)


# ------------------------------------------------------- verification

def d_nabla(V: list, G) -> list:
    """``(d_nabla V)^k_{ij} = d_i V^k_j - d_j V^k_i + G^k_{is} V^s_j - G^k_{js} V^s_i``.

    Returned as ``D[k][i][j]``; ``G`` is a :class:`Connection` or a dense array.
    """
    n = len(V)
    Gd = G.dense() if isinstance(G, Connection) else G
    dV = [[[V[k][j].diff(s) for s in range(n)] for j in range(n)] for k in range(n)]
    z = V[0][0] * 0
    D = [[[z] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(i + 1, n):
                acc = dV[k][j][i] - dV[k][i][j]
                for s in range(n):
                    for g, v, sign in ((Gd[k][i][s], V[s][j], 1), (Gd[k][j][s], V[s][i], -1)):
                        if not g.is_zero() and not v.is_zero():
                            acc = acc + g * v if sign > 0 else acc - g * v
                D[k][i][j] = acc
                D[k][j][i] = -acc
    return D


def verify_connection(spec: JordanSpec, a0: Polynomial, G) -> dict:
    """Check the three defining properties; lists hold violating 0-based index tuples."""
    n = spec.n
    ring = a0.ring
    Gd = G.dense() if isinstance(G, Connection) else G
    torsion = [(i, j, k) for i in range(n) for j in range(n) for k in range(j + 1, n)
               if Gd[i][j][k] != Gd[i][k][j]]
    unit = []
    for i in range(n):
        for j in range(n):
            acc = lift(0, ring)
            for off in spec.offsets:
                acc = acc + Gd[i][off][j]
            if not acc.is_zero():
                unit.append((i, j))
    X = [lift(ring.coord(i), ring) for i in range(n)]
    for off in spec.offsets:
        X[off] = X[off] - a0
    D = d_nabla(mult_operator(X, canonical_c(spec)), Gd)
    dn = [(k, i, j) for k in range(n) for i in range(n) for j in range(i + 1, n) if not D[k][i][j].is_zero()]
    return {
        "torsionless": not torsion,
        "flat_unit": not unit,
        "dnabla_zero": not dn,
        "violations": {"torsionless": torsion, "flat_unit": unit, "dnabla_zero": dn},
    }


def nabla_c_symmetry(G, c: CTensor) -> list:
    """Violations of ``nabla_j c^i_{ks} = nabla_k c^i_{js}`` as 0-based ``(i, j, k, s)``."""
    n = c.n
    Gd = G.dense() if isinstance(G, Connection) else G
    ring = Gd[0][0][0].ring
    z = lift(0, ring)

    def nabla_c(j, i, k, s):
        acc = z
        for l in range(n):
            if c[l, k, s]:
                acc = acc + Gd[i][j][l] * c[l, k, s]
            if c[i, l, s]:
                acc = acc - Gd[l][j][k] * c[i, l, s]
            if c[i, k, l]:
                acc = acc - Gd[l][j][s] * c[i, k, l]
        return acc

    out = []
    for i, j, k, s in product(range(n), repeat=4):
        if j < k and not (nabla_c(j, i, k, s) - nabla_c(k, i, j, s)).is_zero():
            out.append((i, j, k, s))
    return out
