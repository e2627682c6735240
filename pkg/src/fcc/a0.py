"""Solutions of the master equation ``d d_L a0 = 0``.

For a single Jordan block of size ``n`` the general solution is

    a0 = F_n + sum_{s>0} 1/s! sum_{k_1..k_s in 2..n} u^{k_1}...u^{k_s} D^{s-1} F_{n+s-sum k}

with ``D = d/du^1`` and ``F_j = 0`` for ``j <= 0``.  With several blocks the
solution is the sum of one such expression per block, each in that block's
coordinates.  The ``F`` are polynomials in the block's first coordinate, or
jet variables of a :class:`PolyRing` when a fully symbolic answer is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .core import JordanSpec
from .poly import PolyRing, Polynomial, Q


@dataclass(frozen=True)
class A0Family:
    """Coefficient arrays ``blocks[alpha][i]`` (ascending degree) of ``F_{alpha,i}``."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(tuple(Q(c) for c in F) for F in block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)

    def check_shape(self, spec: JordanSpec):
        sizes = tuple(len(b) for b in self.blocks)
        if sizes != spec.block_sizes:
            raise ValueError(f"family shape {list(sizes)} does not match blocks {list(spec.block_sizes)}")

    def functions(self, spec: JordanSpec, ring: PolyRing) -> list:
        """The ``F`` as polynomials in each block's first coordinate."""
        self.check_shape(spec)
        return [[ring.univariate(F, spec.offsets[b]) for F in block] for b, block in enumerate(self.blocks)]

    def to_json(self) -> dict:
        return {"blocks": [[[_json_rational(c) for c in F] for F in block] for block in self.blocks]}


def _json_rational(c):
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def jet_ring(spec: JordanSpec, order: int = 3, params: Sequence[str] = ()) -> PolyRing:
    """Ring with jets ``F1..Fn`` (global numbering, block by block).

    ``F_g`` depends on the first coordinate of its block and carries
    derivatives up to ``order``.
    """
    jets = []
    for b in range(spec.r):
        for i in range(spec.block_sizes[b]):
            jets.append((f"F{spec.offsets[b] + i + 1}", spec.offsets[b], order))
    return spec.ring(params=params, jets=jets)


def symbolic_functions(spec: JordanSpec, ring: PolyRing) -> list:
    """Jet variables of :func:`jet_ring` grouped by block."""
    return [[ring.var(f"F{spec.offsets[b] + i + 1}") for i in range(spec.block_sizes[b])]
            for b in range(spec.r)]


def _weight_partitions(total: int, largest: int):
    """Multisets of positive parts <= ``largest`` summing to at most ``total``.

    Yielded as dicts ``{part: multiplicity}``.
    """
    def rec(remaining, cap):
        yield {}
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part):
                out = dict(rest)
                out[part] = out.get(part, 0) + 1
                yield out
    yield from rec(total, largest)


def build_single_block(n: int, F: Sequence, ring: PolyRing | None = None,
                       coords: Sequence[int] | None = None) -> Polynomial:
    """General single-block solution for ``F = [F_1, ..., F_n]``.

    ``F`` entries are polynomials (or coefficient arrays) in the block's first
    coordinate ``coords[0]``.  The multi-index sum is grouped by the weight
    multiset ``{k_j - 1}``: a multiset with multiplicities ``c_w`` stands for
    ``s!/prod c_w!`` ordered tuples.
    """
    if n < 1:
        raise ValueError("block size must be positive")
    if len(F) != n:
        raise ValueError(f"expected {n} functions, got {len(F)}")
    ring = ring or PolyRing(n)
    coords = list(coords) if coords is not None else list(range(n))
    if len(coords) != n:
        raise ValueError("coords must list one flat index per block coordinate")
    main = coords[0]
    F = [f if isinstance(f, Polynomial) else ring.univariate(f, main) for f in F]
    derivs = {}

    def D(j, order):
        key = (j, order)
        if key not in derivs:
            derivs[key] = F[j] if order == 0 else D(j, order - 1).diff(main)
        return derivs[key]

    total = ring.zero()
    for parts in _weight_partitions(n - 1, n - 1):
        weight = sum(w * c for w, c in parts.items())
        s = sum(parts.values())
        j = n - weight - 1
        if s == 0:
            total = total + F[n - 1]
            continue
        coeff = Q(1)
        mono = ring.one()
        for w, c in parts.items():
            coeff /= factorial(c)
            mono = mono * ring.coord(coords[w]) ** c
        total = total + (mono * D(j, s - 1)).scale(coeff)
    return total


def build_single_block_literal(n: int, F: Sequence, ring: PolyRing | None = None,
                               coords: Sequence[int] | None = None) -> Polynomial:
    """Same sum, written as the literal nested sums over ordered tuples."""
    ring = ring or PolyRing(n)
    coords = list(coords) if coords is not None else list(range(n))
    main = coords[0]
    F = [f if isinstance(f, Polynomial) else ring.univariate(f, main) for f in F]
    total = F[n - 1]
    from itertools import product
    for s in range(1, n):
        acc = ring.zero()
        for ks in product(range(2, n + 1), repeat=s):
            idx = n + s - sum(ks)
            if idx < 1:
                continue
            term = F[idx - 1]
            for _ in range(s - 1):
                term = term.diff(main)
            for k in ks:
                term = term * ring.coord(coords[k - 1])
            acc = acc + term
        total = total + acc.scale(Q(1) / factorial(s))
    return total


def build_a0(spec: JordanSpec, family, ring: PolyRing | None = None) -> Polynomial:
    """Sum of single-block solutions, one per Jordan block.

    ``family`` is an :class:`A0Family` or a per-block list of polynomials.
    """
    ring = ring or spec.ring()
    if isinstance(family, A0Family):
        funcs = family.functions(spec, ring)
    else:
        funcs = [list(block) for block in family]
        if tuple(len(b) for b in funcs) != spec.block_sizes:
            raise ValueError("family shape does not match the Jordan blocks")
    total = ring.zero()
    for b in range(spec.r):
        total = total + build_single_block(spec.block_sizes[b], funcs[b], ring, spec.block_indices(b))
    return total


def linear_a0(spec: JordanSpec, epsilon: Sequence, ring: PolyRing | None = None) -> Polynomial:
    """Linear seed from ``epsilon``.

    With one value per block this is ``sum_alpha m_alpha eps_alpha u^{1(alpha)}``;
    with one value per coordinate it is ``sum_i eps_i u^i``.
    """
    ring = ring or spec.ring()
    eps = [e if isinstance(e, Polynomial) else ring.const(e) for e in epsilon]
    if len(eps) == spec.n:
        return sum((eps[i] * ring.coord(i) for i in range(spec.n)), ring.zero())
    if len(eps) == spec.r:
        return sum((eps[b] * ring.coord(spec.offsets[b]) * spec.block_sizes[b] for b in range(spec.r)),
                   ring.zero())
    raise ValueError(f"epsilon needs {spec.r} (per block) or {spec.n} (per coordinate) entries")


# ------------------------------------------------------------------ checks

def check_master(spec: JordanSpec, f: Polynomial) -> dict:
    """Residuals of the master equation in block form.

    For flat indices ``I = i(alpha) < J = j(beta)`` the residual is

        sum_{s>i} u^{(s-i+1)(alpha)} d_{s(alpha)} d_J f
      - sum_{s>j} u^{(s-j+1)(beta)} d_{s(beta)} d_I f
      + (u^{1(alpha)} - u^{1(beta)}) d_I d_J f

    Returns ``{(I, J): residual}`` for the nonzero ones (empty = solution).
    """
    ring = f.ring
    if ring.ncoords != spec.n:
        raise ValueError(f"polynomial has {ring.ncoords} coordinates, spec needs {spec.n}")
    n = spec.n
    grad = [f.diff(k) for k in range(n)]
    hess = [[grad[a].diff(b) for b in range(n)] for a in range(n)]
    out = {}
    for I in range(n):
        a, i = spec.label(I)
        for J in range(I + 1, n):
            b, j = spec.label(J)
            res = ring.zero()
            for s in range(i + 1, spec.block_sizes[a]):
                res = res + ring.coord(spec.flat(a, s - i)) * hess[spec.flat(a, s)][J]
            for s in range(j + 1, spec.block_sizes[b]):
                res = res - ring.coord(spec.flat(b, s - j)) * hess[spec.flat(b, s)][I]
            if a != b:
                res = res + (ring.coord(spec.offsets[a]) - ring.coord(spec.offsets[b])) * hess[I][J]
            if res:
                out[(I, J)] = res
    return out


def check_system_form(n: int, f: Polynomial) -> list:
    """Violations of the derivative-relation form of the single-block equation.

    Relations (1-based indices): ``d_i d_j f = d_k d_l f`` when ``i+j = k+l``
    and ``d_i d_j f = 0`` when ``n - i - j <= -2``.  Each violation is
    ``("equal", (i, j), (k, l))`` or ``("zero", (i, j))`` with 1-based labels.
    """
    if f.ring.ncoords != n:
        raise ValueError(f"polynomial has {f.ring.ncoords} coordinates, expected {n}")
    grad = [f.diff(k) for k in range(n)]
    hess = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            hess[(i, j)] = grad[i - 1].diff(j - 1)
    out = []
    for total in range(2, 2 * n + 1):
        pairs = [(i, total - i) for i in range(1, n + 1) if i <= total - i <= n]
        if total >= n + 2:
            for p in pairs:
                if hess[p]:
                    out.append(("zero", p))
        else:
            for p, q in zip(pairs, pairs[1:]):
                if hess[p] != hess[q]:
                    out.append(("equal", p, q))
    return out


def is_linear(f: Polynomial) -> bool:
    """True iff ``f`` has degree at most one in the coordinates (and jets)."""
    return f.coord_degree() <= 1


def partial_bridge(n: int, F: Sequence, k: int, ring: PolyRing | None = None):
    """Compare ``d_{n+1-k} a0^(n)(F_1..F_n)`` with the lower-dimensional formula.

    ``k`` is 1-based as in ``1 <= k <= n``.  For ``k < n`` the right-hand side
    is ``a0^(k)(F_1', ..., F_{k-1}', F_k)``; for ``k = n`` it is
    ``a0^(n)(F_1', ..., F_n')``.  Returns ``(lhs, rhs, equal)``.
    """
    if not 1 <= k <= n:
        raise ValueError("k must satisfy 1 <= k <= n")
    ring = ring or PolyRing(n)
    F = [f if isinstance(f, Polynomial) else ring.univariate(f, 0) for f in F]
    lhs = build_single_block(n, F, ring).diff(n - k)
    if k < n:
        args = [f.diff(0) for f in F[:k - 1]] + [F[k - 1]]
        rhs = build_single_block(k, args, ring, list(range(k)))
    else:
        rhs = build_single_block(n, [f.diff(0) for f in F], ring)
    return lhs, rhs, lhs == rhs


def cross_block_hessian(spec: JordanSpec, f: Polynomial) -> dict:
    """Nonzero second partials ``d_I d_J f`` with ``I``, ``J`` in different blocks."""
    out = {}
    for I in range(spec.n):
        for J in range(I + 1, spec.n):
            if spec.label(I)[0] != spec.label(J)[0]:
                h = f.diff(I).diff(J)
                if h:
                    out[(I, J)] = h
    return out
