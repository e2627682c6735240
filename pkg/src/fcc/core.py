"""Canonical data of a regular F-manifold with Euler field.

Coordinates are ordered block by block: the ``i``-th coordinate of block
``alpha`` (both 1-based in labels) has flat 0-based index
``m_1 + ... + m_{alpha-1} + i - 1``.  All Python-level indices are 0-based;
labels printed for humans are 1-based.

Tensors are plain nested lists of :class:`RationalExpr`:

* vector field  ``X[i]``
* (1,1)-tensor  ``T[i][j] = T^i_j``
* c-tensor      :class:`CTensor`, ``c^i_{jk}`` with constant coefficients
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from gmpy2 import mpq

from .poly import PolyRing, Polynomial, Q
from .ratexpr import RationalExpr, lift

VectorField = list
OneOneTensor = list


@dataclass(frozen=True)
class JordanSpec:
    """Ordered Jordan block sizes ``(m_1, ..., m_r)``."""

    block_sizes: tuple

    def __post_init__(self):
        sizes = tuple(self.block_sizes)
        if not sizes:
            raise ValueError("at least one Jordan block is required")
        for m in sizes:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError(f"block sizes must be positive integers, got {m!r}")
        object.__setattr__(self, "block_sizes", sizes)

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    @property
    def r(self) -> int:
        return len(self.block_sizes)

    @cached_property
    def offsets(self) -> tuple:
        out, acc = [], 0
        for m in self.block_sizes:
            out.append(acc)
            acc += m
        return tuple(out)

    def flat(self, block: int, inner: int) -> int:
        """0-based flat index of (block, inner), both 0-based."""
        if not 0 <= block < self.r or not 0 <= inner < self.block_sizes[block]:
            raise IndexError(f"no coordinate ({block}, {inner}) in {self.block_sizes}")
        return self.offsets[block] + inner

    def label(self, flat: int) -> tuple:
        """Inverse of :meth:`flat`: ``(block, inner)``, both 0-based."""
        if not 0 <= flat < self.n:
            raise IndexError(f"flat index {flat} out of range")
        for b in range(self.r - 1, -1, -1):
            if flat >= self.offsets[b]:
                return b, flat - self.offsets[b]
        raise AssertionError("unreachable")

    def block_indices(self, block: int) -> list:
        o = self.offsets[block]
        return list(range(o, o + self.block_sizes[block]))

    def main_indices(self) -> list:
        """Flat index of the first coordinate of every block."""
        return list(self.offsets)

    def ring(self, params: Sequence[str] = (), jets: Sequence[tuple] = ()) -> PolyRing:
        return PolyRing(self.n, params=params, jets=jets)

    def __str__(self):
        return "+".join(str(m) for m in self.block_sizes)


class CTensor:
    """Structure constants ``c^i_{jk}`` with constant rational coefficients."""

    def __init__(self, n: int, entries: dict):
        self.n = n
        self.entries = {k: Q(v) for k, v in entries.items() if Q(v)}

    def __getitem__(self, ijk) -> mpq:
        return self.entries.get(ijk, mpq(0))

    def items(self):
        return self.entries.items()

    def upper(self, i: int) -> dict:
        return {(j, k): v for (a, j, k), v in self.entries.items() if a == i}

    def without(self, ijk) -> "CTensor":
        return CTensor(self.n, {k: v for k, v in self.entries.items() if k != ijk})

    def is_symmetric(self) -> bool:
        return all(self[i, k, j] == v for (i, j, k), v in self.entries.items())

    def __eq__(self, other):
        return isinstance(other, CTensor) and self.n == other.n and self.entries == other.entries

    def labels(self) -> list:
        """Sorted 1-based ``(i, j, k)`` triples of the nonzero entries."""
        return sorted((i + 1, j + 1, k + 1) for i, j, k in self.entries)


def canonical_c(spec: JordanSpec) -> CTensor:
    entries = {}
    for b in range(spec.r):
        idx = spec.block_indices(b)
        m = len(idx)
        for j in range(m):
            for k in range(m - j):
                entries[(idx[j + k], idx[j], idx[k])] = 1
    return CTensor(spec.n, entries)


def canonical_structure(spec: JordanSpec, ring: PolyRing | None = None):
    """Return ``(c, e, E, L)`` in canonical coordinates."""
    ring = ring or spec.ring()
    c = canonical_c(spec)
    e = [lift(1 if i in spec.offsets else 0, ring) for i in range(spec.n)]
    E = [lift(ring.coord(i), ring) for i in range(spec.n)]
    return c, e, E, mult_operator(E, c)


# ---------------------------------------------------------------- tensors

def zeros(n: int, ring: PolyRing) -> list:
    z = lift(0, ring)
    return [[z] * n for _ in range(n)]


def identity(n: int, ring: PolyRing) -> list:
    z, o = lift(0, ring), lift(1, ring)
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def matmul(A: list, B: list) -> list:
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for s in range(m):
                a, b = A[i][s], B[s][j]
                if a.is_zero() or b.is_zero():
                    continue
                t = a * b
                acc = t if acc is None else acc + t
            row.append(acc if acc is not None else A[i][0] * 0)
        out.append(row)
    return out


def matvec(A: list, x: list) -> list:
    out = []
    for i in range(len(A)):
        acc = x[0] * 0
        for s in range(len(x)):
            if not A[i][s].is_zero() and not x[s].is_zero():
                acc = acc + A[i][s] * x[s]
        out.append(acc)
    return out


def matsub(A: list, B: list) -> list:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scalar_identity(a, n: int, ring: PolyRing) -> list:
    a = lift(a, ring)
    z = lift(0, ring)
    return [[a if i == j else z for j in range(n)] for i in range(n)]


def columns(vectors: Sequence[list]) -> list:
    """Matrix whose ``k``-th column is ``vectors[k]``."""
    n = len(vectors[0])
    return [[v[i] for v in vectors] for i in range(n)]


def circ(X: list, Y: list, c: CTensor) -> list:
    """``(X o Y)^i = c^i_{jk} X^j Y^k``."""
    if len(X) != c.n or len(Y) != c.n:
        raise ValueError("dimension mismatch")
    out = [X[0] * 0 for _ in range(c.n)]
    for (i, j, k), v in c.items():
        if not X[j].is_zero() and not Y[k].is_zero():
            out[i] = out[i] + X[j] * Y[k] * v
    return out


def mult_operator(X: list, c: CTensor) -> list:
    """Matrix of ``X o``: entry ``[i][k] = c^i_{jk} X^j``."""
    if len(X) != c.n:
        raise ValueError("dimension mismatch")
    n = c.n
    z = X[0] * 0
    T = [[z] * n for _ in range(n)]
    for (i, j, k), v in c.items():
        if not X[j].is_zero():
            T[i][k] = T[i][k] + X[j] * v
    return T


def euler_powers(E: list, e: list, c: CTensor, count: int) -> list:
    """``[E^0, E^1, ..., E^{count-1}]`` with ``E^0 = e``."""
    out = [e]
    for _ in range(count - 1):
        out.append(circ(E, out[-1], c))
    return out


# ------------------------------------------------------------ determinant

def bareiss(M: list) -> Polynomial:
    """Fraction-free determinant of a square matrix of polynomials."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    A = [list(row) for row in M]
    ring = A[0][0].ring
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[k][k] * A[i][j] - A[i][k] * A[k][j]
                q = num.divexact(prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                A[i][j] = q
        prev = A[k][k]
    return A[n - 1][n - 1].scale(sign)


def det(T: list) -> RationalExpr:
    """Determinant: clear each row to a polynomial row, then Bareiss."""
    if any(len(row) != len(T) for row in T):
        raise ValueError("determinant of a non-square matrix")
    ring = T[0][0].ring
    rows = []
    scale = ring.one()
    for row in T:
        den = _row_denominator(row, ring)
        rows.append([(x * den).as_poly() for x in row])
        scale = scale * den
    return RationalExpr.frac(bareiss(rows), scale)


def _row_denominator(row: list, ring: PolyRing) -> Polynomial:
    """Least common multiple of the factored denominators in ``row``."""
    factors = {}
    for x in row:
        for f, e in x.factors.items():
            if factors.get(f, 0) < e:
                factors[f] = e
    out = ring.one()
    for f, e in factors.items():
        out = out * f ** e
    return out


class SingularError(ArithmeticError):
    """Matrix is not invertible over the rational-function field."""


def invert(T: list) -> list:
    """Gauss-Jordan inverse over the rational-function field."""
    n = len(T)
    ring = T[0][0].ring
    A = [list(row) + ident_row for row, ident_row in zip(T, identity(n, ring))]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not A[r][col].is_zero():
                if piv is None or len(A[r][col].num) < len(A[piv][col].num):
                    piv = r
        if piv is None:
            raise SingularError("singular operator")
        A[col], A[piv] = A[piv], A[col]
        inv = A[col][col].inverse()
        A[col] = [x * inv if not x.is_zero() else x for x in A[col]]
        for r in range(n):
            if r != col and not A[r][col].is_zero():
                f = A[r][col]
                A[r] = [a - f * b if not b.is_zero() else a for a, b in zip(A[r], A[col])]
    return [row[n:] for row in A]


# ------------------------------------------------------ structural checks

def nijenhuis(T: list) -> list:
    """``N^i_{jk}`` as a nested list ``N[i][j][k]``."""
    n = len(T)
    dT = [[[T[i][j].diff(s) for s in range(n)] for j in range(n)] for i in range(n)]
    z = T[0][0] * 0
    N = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                acc = z
                for s in range(n):
                    if not T[s][j].is_zero() and not dT[i][k][s].is_zero():
                        acc = acc + T[s][j] * dT[i][k][s]
                    if not T[s][k].is_zero() and not dT[i][j][s].is_zero():
                        acc = acc - T[s][k] * dT[i][j][s]
                    inner = dT[s][k][j] - dT[s][j][k]
                    if not T[i][s].is_zero() and not inner.is_zero():
                        acc = acc - T[i][s] * inner
                N[i][j][k] = acc
                N[i][k][j] = -acc
    return N


def associativity_residual(c: CTensor) -> dict:
    """Nonzero ``c^m_{ij} c^d_{mk} - c^m_{jk} c^d_{im}`` keyed by ``(d, i, j, k)``."""
    n = c.n
    out = {}
    for d, i, j, k in product(range(n), repeat=4):
        v = sum(c[m, i, j] * c[d, m, k] - c[m, j, k] * c[d, i, m] for m in range(n))
        if v:
            out[(d, i, j, k)] = v
    return out


def hertling_manin_residual(c: CTensor, ring: PolyRing | None = None) -> dict:
    """Coordinate form of the Hertling-Manin condition.

    The derivative terms vanish for constant structure constants, so on top of
    them the residual reports the associativity and symmetry defects the
    coordinate form presupposes.  Keys are ``("hm", k, i, j, l, m)``,
    ``("assoc", d, i, j, k)`` and ``("sym", i, j, k)``.
    """
    n = c.n
    ring = ring or PolyRing(n)
    C = {key: lift(v, ring) for key, v in c.items()}
    z = lift(0, ring)

    def cc(i, j, k):
        return C.get((i, j, k), z)

    dC = {(key, s): C[key].diff(s) for key in C for s in range(n)}

    def dc(s, i, j, k):
        return dC.get(((i, j, k), s), z)

    out = {}
    if dC and any(not v.is_zero() for v in dC.values()):
        for k, i, j, l, m in product(range(n), repeat=5):
            acc = z
            for s in range(n):
                acc = (acc + dc(s, k, i, m) * cc(s, j, l) - dc(s, k, j, l) * cc(s, i, m)
                       + dc(i, s, j, l) * cc(k, s, m) + dc(m, s, j, l) * cc(k, s, i)
                       - dc(l, s, i, m) * cc(k, j, s) - dc(j, s, i, m) * cc(k, l, s))
            if not acc.is_zero():
                out[("hm", k, i, j, l, m)] = acc
    for key, v in associativity_residual(c).items():
        out[("assoc",) + key] = lift(v, ring)
    for (i, j, k), v in c.items():
        if c[i, k, j] != v:
            out[("sym", i, j, k)] = lift(v - c[i, k, j], ring)
    return out


def d_L_function(f, L: list) -> list:
    """``(d_L f)_i = L^s_i d_s f``."""
    n = len(L)
    f = lift(f, L[0][0].ring)
    grad = [f.diff(s) for s in range(n)]
    out = []
    for i in range(n):
        acc = f * 0
        for s in range(n):
            if not L[s][i].is_zero() and not grad[s].is_zero():
                acc = acc + L[s][i] * grad[s]
        out.append(acc)
    return out


def is_zero_tensor(T) -> bool:
    if isinstance(T, RationalExpr):
        return T.is_zero()
    return all(is_zero_tensor(x) for x in T)
