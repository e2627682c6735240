"""The integrable hierarchy generated by a seed ``a0``.

Starting from ``V_0 = I``, the recursion is

    d a_{k+1} = d_L a_k - a_k d a0,      V_{k+1} = V_k L - a_k I,

and ``X_(k) = V_k e``, so that ``X_(k) = E^k - a0 E^{k-1} - ... - a_{k-1} E^0``.
Each ``a_{k+1}`` is fixed by requiring it to vanish at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (JordanSpec, canonical_structure, columns, det, euler_powers, identity,
                   matmul, matvec, scalar_identity)
from .poly import ClosednessError, Polynomial, integrate_radial
from .ratexpr import RationalExpr, lift


class SeedError(ValueError):
    """The seed does not solve the master equation, so the recursion breaks."""


@dataclass
class Hierarchy:
    spec: JordanSpec
    a: list
    V: list
    X: list

    @property
    def depth(self) -> int:
        return len(self.a) - 1


def _poly_entry(x) -> Polynomial:
    return x.as_poly() if isinstance(x, RationalExpr) else x


def next_a(spec: JordanSpec, a_k: Polynomial, a0: Polynomial, L: list | None = None) -> Polynomial:
    """Integrate ``d_L a_k - a_k d a0`` radially from the origin."""
    ring = a0.ring
    if L is None:
        L = canonical_structure(spec, ring)[3]
    n = spec.n
    grad_k = [a_k.diff(s) for s in range(n)]
    omega = []
    for i in range(n):
        acc = -(a_k * a0.diff(i))
        for s in range(n):
            Lsi = _poly_entry(L[s][i])
            if Lsi and grad_k[s]:
                acc = acc + Lsi * grad_k[s]
        omega.append(acc)
    try:
        return integrate_radial(omega)
    except ClosednessError as exc:
        i, j = exc.pair
        raise SeedError(
            f"d_L a_k - a_k d a0 is not closed at ({i + 1},{j + 1}); a0 is not a valid seed") from exc


def next_V(V_k: list, L: list, a_k) -> list:
    """``V_k L - a_k I``."""
    n = len(L)
    ring = L[0][0].ring
    return [[x - y for x, y in zip(r1, r2)]
            for r1, r2 in zip(matmul(V_k, L), scalar_identity(lift(a_k, ring), n, ring))]


def generate(spec: JordanSpec, a0: Polynomial, K: int | None = None) -> Hierarchy:
    """Hierarchy ``a_0..a_K``, ``V_0..V_K`` and ``X_(0)..X_(K)``; ``K`` defaults to ``n - 1``."""
    if K is None:
        K = spec.n - 1
    if K < 0:
        raise ValueError("depth must be non-negative")
    ring = a0.ring
    c, e, E, L = canonical_structure(spec, ring)
    a = [a0]
    V = [identity(spec.n, ring)]
    for _ in range(K):
        V.append(next_V(V[-1], L, a[-1]))
        a.append(next_a(spec, a[-1], a0, L))
    X = [matvec(Vk, e) for Vk in V]
    return Hierarchy(spec, a, V, X)


def check_commutation(A: list, B: list) -> dict:
    """Residuals of ``[A, B] = 0`` and of the compatibility of the two flows.

    The second condition is
    ``(d_s A^i_j) B^s_m + A^i_s d_j B^s_m = (d_s B^i_j) A^s_m + B^i_s d_j A^s_m``
    symmetrized in ``(j, m)``: it multiplies ``u^j_x u^m_x`` in ``u_{t tau} - u_{tau t}``,
    so only the symmetric part is a condition on the flows.  Keys are
    ``("bracket", i, j)`` and ``("flows", i, j, m)`` with ``j <= m``; an
    empty dict means both hold identically.
    """
    n = len(A)
    if len(B) != n:
        raise ValueError("operators of different sizes")
    out = {}
    AB, BA = matmul(A, B), matmul(B, A)
    for i in range(n):
        for j in range(n):
            d = AB[i][j] - BA[i][j]
            if not d.is_zero():
                out[("bracket", i, j)] = d
    dA = [[[A[i][j].diff(s) for s in range(n)] for j in range(n)] for i in range(n)]
    dB = [[[B[i][j].diff(s) for s in range(n)] for j in range(n)] for i in range(n)]
    z = A[0][0] * 0

    def flow_term(i, j, m):
        acc = z
        for s in range(n):
            for x, y in ((dA[i][j][s], B[s][m]), (A[i][s], dB[s][m][j])):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            for x, y in ((dB[i][j][s], A[s][m]), (B[i][s], dA[s][m][j])):
                if not x.is_zero() and not y.is_zero():
                    acc = acc - x * y
        return acc

    for i in range(n):
        terms = [[flow_term(i, j, m) for m in range(n)] for j in range(n)]
        for j in range(n):
            for m in range(j, n):
                acc = terms[j][m] + terms[m][j] if m != j else terms[j][j]
                if not acc.is_zero():
                    out[("flows", i, j, m)] = acc
    return out


def independence_det(h: Hierarchy) -> tuple:
    """``(det[X_(0) | ... | X_(n-1)], det[E^0 | ... | E^{n-1}])``."""
    n = h.spec.n
    if h.depth < n - 1:
        raise ValueError(f"need depth >= {n - 1}, have {h.depth}")
    ring = h.a[0].ring
    c, e, E, L = canonical_structure(h.spec, ring)
    return det(columns(h.X[:n])), det(columns(euler_powers(E, e, c, n)))
