"""Exact rational expressions ``num / den`` over a :class:`PolyRing`.

The denominator is kept as a product of monic factors ``{factor: exponent}``.
Sums use the least common multiple of the factor sets, so expressions whose
denominators share factors (the usual case for Christoffel symbols) do not
blow up.  Zero-testing never needs a GCD: an expression is zero exactly when
its expanded numerator is the zero polynomial.  After each operation the
numerator is trial-divided by the denominator factors, which cancels common
factors cheaply; this only affects size, never correctness.

Because every factor is monic in graded-lex order, the expanded denominator
always has leading coefficient 1.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from gmpy2 import mpq

from .poly import BITS, FIELD, DimensionError, Polynomial, PolyRing, Q


class PoleError(ZeroDivisionError):
    """The denominator vanishes at the evaluation point."""


def _monomial_split(p: Polynomial):
    """Split ``p`` into (variable-power factors, cofactor)."""
    ring = p.ring
    m = p.content_monomial()
    factors = {}
    if m:
        for i in range(ring.nvars):
            e = (m >> (BITS * i)) & FIELD
            if e:
                factors[ring.var(i)] = e
        p = p.divexact(Polynomial(ring, {m: mpq(1)}))
    return factors, p


def _split_denominator(d: Polynomial, hints=()):
    """Return ``(scalar, factors)`` with ``d == scalar * prod(f**e)``.

    Factors are monic.  ``hints`` are known factors tried by trial division
    before the remaining cofactor is accepted as a factor of its own.
    """
    if not d.terms:
        raise ZeroDivisionError("division by the zero expression")
    lc, d = d.monic()
    factors, d = _monomial_split(d)
    for h in hints:
        if d.is_constant():
            break
        if h.is_constant() or len(h.terms) == 1:
            continue
        while True:
            q = d.divexact(h)
            if q is None:
                break
            factors[h] = factors.get(h, 0) + 1
            d = q
    if not d.is_constant():
        c, d = d.monic()
        lc = lc * c
        factors[d] = factors.get(d, 0) + 1
    else:
        lc = lc * d.constant_term()
    return lc, factors


def _expand(ring: PolyRing, factors: Mapping) -> Polynomial:
    out = ring.one()
    for f, e in factors.items():
        out = out * f ** e
    return out


class RationalExpr:
    """Immutable ratio of polynomials with a factored monic denominator."""

    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: Polynomial, factors: Mapping | None = None, _checked=False):
        self.num = num
        self.factors = dict(factors) if factors else {}
        self._den = None
        if not _checked:
            self._cancel()

    # ---- construction
    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalExpr":
        return cls(p, None, _checked=True)

    @classmethod
    def frac(cls, num: Polynomial, den: Polynomial) -> "RationalExpr":
        num = num if isinstance(num, Polynomial) else den.ring.const(num)
        den = den if isinstance(den, Polynomial) else num.ring.const(den)
        if num.ring != den.ring:
            raise DimensionError("numerator and denominator live in different rings")
        lc, factors = _split_denominator(den)
        return cls(num.scale(1 / lc), factors)

    @classmethod
    def const(cls, ring: PolyRing, c) -> "RationalExpr":
        return cls(ring.const(c), None, _checked=True)

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    @property
    def den(self) -> Polynomial:
        if self._den is None:
            self._den = _expand(self.ring, self.factors)
        return self._den

    def _cancel(self):
        num = self.num
        if not num.terms:
            self.factors = {}
            return
        keep = {}
        for f, e in self.factors.items():
            while e:
                q = num.divexact(f)
                if q is None:
                    break
                num = q
                e -= 1
            if e:
                keep[f] = e
        self.num = num
        self.factors = keep

    def _coerce(self, other) -> "RationalExpr":
        if isinstance(other, RationalExpr):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DimensionError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise DimensionError(f"ring mismatch: {self.ring} vs {other.ring}")
            return RationalExpr(other, None, _checked=True)
        return RationalExpr(self.ring.const(other), None, _checked=True)

    # ---- predicates
    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self) -> bool:
        return not self.factors

    def as_poly(self) -> Polynomial:
        if self.factors:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, DimensionError):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # ---- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        fa, fb = self.factors, other.factors
        if fa == fb:
            return RationalExpr(self.num + other.num, fa)
        lcm = dict(fa)
        for f, e in fb.items():
            if lcm.get(f, 0) < e:
                lcm[f] = e
        ring = self.ring
        ma = {f: e - fa.get(f, 0) for f, e in lcm.items() if e > fa.get(f, 0)}
        mb = {f: e - fb.get(f, 0) for f, e in lcm.items() if e > fb.get(f, 0)}
        num = self.num * _expand(ring, ma) + other.num * _expand(ring, mb)
        return RationalExpr(num, lcm)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.factors, _checked=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (RationalExpr, Polynomial)):
            c = Q(other)
            if not c:
                return RationalExpr(self.ring.zero(), None, _checked=True)
            return RationalExpr(self.num.scale(c), self.factors, _checked=True)
        other = self._coerce(other)
        if not self.num.terms or not other.num.terms:
            return RationalExpr(self.ring.zero(), None, _checked=True)
        factors = dict(self.factors)
        for f, e in other.factors.items():
            factors[f] = factors.get(f, 0) + e
        if not self.factors and not other.factors:
            return RationalExpr(self.num * other.num, None, _checked=True)
        return RationalExpr(self.num * other.num, factors)

    __rmul__ = __mul__

    def inverse(self) -> "RationalExpr":
        if not self.num.terms:
            raise ZeroDivisionError("division by the zero expression")
        hints = sorted(self.factors, key=len)
        lc, factors = _split_denominator(self.num, hints)
        num = _expand(self.ring, self.factors).scale(1 / lc)
        return RationalExpr(num, factors)

    def __truediv__(self, other):
        if not isinstance(other, (RationalExpr, Polynomial)):
            c = Q(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return RationalExpr(self.num.scale(1 / c), self.factors, _checked=True)
        other = self._coerce(other)
        if not other.num.terms:
            raise ZeroDivisionError("division by the zero expression")
        if not other.factors and other.num.is_constant():
            return self * (1 / other.num.constant_term())
        hints = sorted(set(self.factors) | set(other.factors), key=len)
        lc, factors = _split_denominator(other.num, hints)
        num = self.num * _expand(self.ring, other.factors)
        merged = dict(self.factors)
        for f, e in factors.items():
            merged[f] = merged.get(f, 0) + e
        return RationalExpr(num.scale(1 / lc), merged)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("integer exponents only")
        if k < 0:
            return self.inverse() ** (-k)
        num = self.num ** k
        return RationalExpr(num, {f: e * k for f, e in self.factors.items()}, _checked=True)

    # ---- calculus and evaluation
    def diff(self, k: int) -> "RationalExpr":
        """Partial derivative with respect to coordinate ``k`` (0-based)."""
        dnum = self.num.diff(k)
        if not self.factors:
            return RationalExpr(dnum, None, _checked=True)
        ring = self.ring
        moving = {f: f.diff(k) for f in self.factors}
        moving = {f: df for f, df in moving.items() if df.terms}
        if not moving:
            return RationalExpr(dnum, self.factors)
        # d(N/prod f^e) = (dN*P - N*sum e*df*P/f) / (D*P) with P = prod of moving f
        prod_all = ring.one()
        for f in moving:
            prod_all = prod_all * f
        acc = dnum * prod_all
        for f, df in moving.items():
            rest = ring.one()
            for g in moving:
                if g is not f:
                    rest = rest * g
            acc = acc - (self.num * df * rest).scale(self.factors[f])
        factors = dict(self.factors)
        for f in moving:
            factors[f] += 1
        return RationalExpr(acc, factors)

    def evaluate(self, point: Sequence) -> mpq:
        d = self.den.evaluate(point)
        if not d:
            raise PoleError(f"denominator vanishes at {list(point)}")
        return self.num.evaluate(point) / d

    def substitute(self, values: Mapping) -> "RationalExpr":
        den = self.den.substitute(values)
        if not den.terms:
            raise PoleError("substitution makes the denominator vanish")
        return RationalExpr.frac(self.num.substitute(values), den)

    def rebase(self, ring: PolyRing) -> "RationalExpr":
        return RationalExpr.frac(self.num.rebase(ring), self.den.rebase(ring))

    # ---- printing
    def __str__(self):
        if not self.factors:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalExpr({self})"


def lift(x, ring: PolyRing) -> RationalExpr:
    """Coerce a scalar, polynomial or expression into ``ring``."""
    if isinstance(x, RationalExpr):
        return x
    if isinstance(x, Polynomial):
        return RationalExpr.from_poly(x)
    return RationalExpr.const(ring, x)


def is_zero(a: RationalExpr) -> bool:
    return a.is_zero()


def evaluate(a, point: Sequence) -> mpq:
    return a.evaluate(point)
