"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are packed into a single Python int: variable ``i`` occupies the
16-bit field starting at bit ``16*i`` and the total degree sits in the field
right above the last variable.  With this layout

* multiplying monomials is integer addition,
* graded-lex order (u1 < u2 < ... , grade first) is plain integer order,
* divisibility is a single masked subtraction.

A :class:`PolyRing` fixes the variable layout.  The first ``ncoords``
variables are the coordinates ``u1..un``.  They are followed by constant
parameters and by *jet* variables, which stand for an arbitrary function of
one coordinate and its successive derivatives: differentiating the jet
``F`` with respect to its coordinate yields the next jet ``F_1``, and so on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

BITS = 16
FIELD = (1 << BITS) - 1
GUARD_BIT = 1 << (BITS - 1)
MAX_EXP = GUARD_BIT - 1

Rational = mpq


class DimensionError(ValueError):
    """Operands live in different polynomial rings."""


class ClosednessError(ValueError):
    """A one-form handed to radial integration is not closed."""

    def __init__(self, i: int, j: int):
        super().__init__(f"one-form is not closed: d_{j + 1} w_{i + 1} != d_{i + 1} w_{j + 1}")
        self.pair = (i, j)


class JetOrderError(ValueError):
    """Differentiated a jet variable past the highest order the ring holds."""


def Q(x) -> mpq:
    """Coerce ints, Fractions, mpq and strings like ``"3/4"`` to an exact rational."""
    if isinstance(x, type(mpq())):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            p, q = s.split("/")
            return mpq(int(p), int(q))
        return mpq(int(s))
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return mpq(x)


def format_rational(c: mpq) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class PolyRing:
    """Variable layout shared by a family of polynomials.

    ``params`` are names of constants.  ``jets`` is a sequence of
    ``(name, coord, order)``: a function of coordinate ``coord`` (0-based)
    represented by variables ``name, name_1, ..., name_order``.
    """

    def __init__(self, ncoords: int, params: Sequence[str] = (), jets: Sequence[tuple] = ()):
        if ncoords < 0:
            raise ValueError("ncoords must be non-negative")
        names = [f"u{i + 1}" for i in range(ncoords)] + list(params)
        links = {}
        for base, coord, order in jets:
            if not 0 <= coord < ncoords:
                raise ValueError(f"jet {base} depends on a missing coordinate")
            start = len(names)
            for d in range(order + 1):
                names.append(base if d == 0 else f"{base}_{d}")
                nxt = start + d + 1 if d < order else None
                links[start + d] = (coord, nxt)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.ncoords = ncoords
        self.names = tuple(names)
        self.nvars = len(names)
        self.params = tuple(params)
        self.jets = tuple(tuple(j) for j in jets)
        self.links = links
        self.index = {name: i for i, name in enumerate(names)}
        self.jets_by_coord = {}
        for v, (coord, _) in links.items():
            self.jets_by_coord.setdefault(coord, []).append(v)
        self.deg_shift = BITS * self.nvars
        self.guards = sum(GUARD_BIT << (BITS * i) for i in range(self.nvars + 1))
        self._key = (ncoords, self.params, self.jets)

    def __eq__(self, other):
        return self is other or (isinstance(other, PolyRing) and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def unit_mono(self, i: int) -> int:
        return (1 << (BITS * i)) | (1 << self.deg_shift)

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise DimensionError(f"expected {self.nvars} exponents, got {len(exps)}")
        m = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= MAX_EXP:
                raise ValueError("exponent out of range")
            m |= e << (BITS * i)
        return m | (sum(exps) << self.deg_shift)

    def unpack(self, m: int) -> tuple:
        return tuple((m >> (BITS * i)) & FIELD for i in range(self.nvars))

    def exponent(self, m: int, i: int) -> int:
        return (m >> (BITS * i)) & FIELD

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {0: mpq(1)})

    def const(self, c) -> "Polynomial":
        c = Q(c)
        return Polynomial(self, {0: c} if c else {})

    def var(self, name_or_index) -> "Polynomial":
        i = self.index[name_or_index] if isinstance(name_or_index, str) else name_or_index
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        return Polynomial(self, {self.unit_mono(i): mpq(1)})

    def coord(self, i: int) -> "Polynomial":
        if not 0 <= i < self.ncoords:
            raise IndexError(f"coordinate index {i} out of range")
        return self.var(i)

    def coords(self) -> list:
        return [self.var(i) for i in range(self.ncoords)]

    def from_dict(self, terms: Mapping[tuple, object]) -> "Polynomial":
        out = {}
        for exps, c in terms.items():
            c = Q(c)
            if c:
                m = self.pack(exps)
                out[m] = out.get(m, 0) + c
        return Polynomial(self, {m: c for m, c in out.items() if c})

    def univariate(self, coeffs: Sequence, i: int) -> "Polynomial":
        """Polynomial ``sum_k coeffs[k] * x^k`` in variable ``i``."""
        x = self.unit_mono(i)
        out = {}
        for k, c in enumerate(coeffs):
            c = Q(c)
            if c:
                out[k * x] = c
        return Polynomial(self, out)


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # ---- basic protocol
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DimensionError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self) -> mpq:
        return self.terms.get(0, mpq(0))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            c = Q(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({0: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    # ---- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        a, b = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        out = dict(a)
        for m, c in b.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = -c
            else:
                s = s - c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = Q(c)
        if not c:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if mb == 0:
                return self.scale(cb) if a is self.terms else other.scale(cb)
            return Polynomial(self.ring, {ma + mb: ca * cb for ma, ca in a.items()})
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ---- structure
    def degree(self) -> int:
        """Total degree over all variables; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.terms) >> self.ring.deg_shift

    def coord_degree(self) -> int:
        """Total degree counting coordinates and jets, not constant parameters."""
        if not self.terms:
            return -1
        ring = self.ring
        idx = list(range(ring.ncoords)) + sorted(ring.links)
        return max(sum(ring.exponent(m, i) for i in idx) for m in self.terms)

    def variables(self) -> set:
        seen = set()
        for m in self.terms:
            for i in range(self.ring.nvars):
                if (m >> (BITS * i)) & FIELD:
                    seen.add(i)
        return seen

    def leading(self) -> tuple:
        m = max(self.terms)
        return m, self.terms[m]

    def items(self):
        """Yield ``(exponent tuple, coefficient)`` in descending graded-lex order."""
        for m in sorted(self.terms, reverse=True):
            yield self.ring.unpack(m), self.terms[m]

    def monic(self) -> tuple:
        """Return ``(lc, self/lc)`` so the leading coefficient becomes 1."""
        _, lc = self.leading()
        return lc, self.scale(1 / lc)

    def content_monomial(self) -> int:
        """Largest monomial dividing every term, as a packed int."""
        ring = self.ring
        mins = None
        for m in self.terms:
            e = ring.unpack(m)
            mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
        return ring.pack(mins) if mins else 0

    def divexact(self, d: "Polynomial"):
        """Return ``self / d`` if ``d`` divides exactly, else ``None``."""
        d = self._coerce(d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self
        guards = self.ring.guards
        md, cd = d.leading()
        if len(d.terms) == 1:
            out = {}
            for m, c in self.terms.items():
                if ((m | guards) - md) & guards != guards:
                    return None
                out[m - md] = c / cd
            return Polynomial(self.ring, out)
        rem = dict(self.terms)
        quot = {}
        dterms = list(d.terms.items())
        while rem:
            mr = max(rem)
            if ((mr | guards) - md) & guards != guards:
                return None
            mq = mr - md
            cq = rem[mr] / cd
            quot[mq] = cq
            for m, c in dterms:
                k = m + mq
                v = rem.get(k, 0) - c * cq
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Polynomial(self.ring, quot)

    # ---- calculus
    def diff(self, k: int) -> "Polynomial":
        """Partial derivative with respect to coordinate ``k`` (0-based).

        Jets attached to coordinate ``k`` follow the chain rule.
        """
        ring = self.ring
        if not 0 <= k < ring.ncoords:
            raise IndexError(f"coordinate index {k} out of range for {ring.ncoords} coordinates")
        out = {}
        shift = BITS * k
        step = ring.unit_mono(k)
        for m, c in self.terms.items():
            e = (m >> shift) & FIELD
            if e:
                t = m - step
                out[t] = out.get(t, 0) + c * e
        for v in ring.jets_by_coord.get(k, ()):
            vshift = BITS * v
            nxt = ring.links[v][1]
            for m, c in self.terms.items():
                e = (m >> vshift) & FIELD
                if e:
                    if nxt is None:
                        raise JetOrderError(f"jet {ring.names[v]} has no higher derivative in this ring")
                    t = m - (1 << vshift) + (1 << (BITS * nxt))
                    out[t] = out.get(t, 0) + c * e
        return Polynomial(ring, {m: c for m, c in out.items() if c})

    def evaluate(self, point: Sequence) -> mpq:
        """Exact value at ``point`` (one rational per ring variable)."""
        ring = self.ring
        if len(point) != ring.nvars:
            raise DimensionError(f"point has {len(point)} entries, ring has {ring.nvars} variables")
        vals = [Q(x) for x in point]
        total = mpq(0)
        for m, c in self.terms.items():
            t = c
            for i in range(ring.nvars):
                e = (m >> (BITS * i)) & FIELD
                if e:
                    t *= vals[i] ** e
            total += t
        return total

    def substitute(self, values: Mapping) -> "Polynomial":
        """Replace some variables (by name or index) with rational constants."""
        ring = self.ring
        vals = {}
        for key, x in values.items():
            vals[ring.index[key] if isinstance(key, str) else key] = Q(x)
        out = {}
        for m, c in self.terms.items():
            for i, x in vals.items():
                e = (m >> (BITS * i)) & FIELD
                if e:
                    c = c * x ** e
                    m = m - e * ring.unit_mono(i) + 0
            if c:
                out[m] = out.get(m, 0) + c
        return Polynomial(ring, {m: c for m, c in out.items() if c})

    def rebase(self, ring: PolyRing) -> "Polynomial":
        """Move to another ring, matching variables by name."""
        src = self.ring
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, k in enumerate(src.unpack(m)):
                if k:
                    try:
                        e[ring.index[src.names[i]]] = k
                    except KeyError:
                        raise DimensionError(f"variable {src.names[i]} missing from target ring") from None
            out[ring.pack(e)] = c
        return Polynomial(ring, out)

    # ---- printing
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for exps, c in self.items():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def partial(p: Polynomial, k: int) -> Polynomial:
    """``d p / d u_{k+1}`` with 0-based ``k``."""
    return p.diff(k)


def is_closed(w: Sequence[Polynomial]):
    """Return the first pair ``(i, j)`` violating closedness, or ``None``."""
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i].diff(j) != w[j].diff(i):
                return (i, j)
    return None


def integrate_radial(w: Sequence[Polynomial]) -> Polynomial:
    """Potential ``f`` of a closed polynomial one-form with ``f(0) = 0``.

    A term ``c*u^a`` in ``w_i`` contributes ``c*u^a*u_i/(|a|+1)``, where
    ``|a|`` counts coordinate degree only; constant parameters ride along.
    """
    if not w:
        raise ValueError("empty one-form")
    ring = w[0].ring
    if len(w) != ring.ncoords:
        raise DimensionError(f"one-form has {len(w)} components, ring has {ring.ncoords} coordinates")
    for comp in w:
        if comp.ring != ring:
            raise DimensionError("one-form components live in different rings")
        for m in comp.terms:
            if any(ring.exponent(m, v) for v in ring.links):
                raise ValueError("radial integration needs polynomial coordinates, not jets")
    bad = is_closed(w)
    if bad is not None:
        raise ClosednessError(*bad)
    out = {}
    for i, comp in enumerate(w):
        step = ring.unit_mono(i)
        for m, c in comp.terms.items():
            d = sum(ring.exponent(m, j) for j in range(ring.ncoords))
            t = m + step
            out[t] = out.get(t, 0) + c / (d + 1)
    return Polynomial(ring, {m: c for m, c in out.items() if c})


def gradient(p: Polynomial) -> list:
    return [p.diff(k) for k in range(p.ring.ncoords)]


def poly_sum(items: Iterable[Polynomial], ring: PolyRing) -> Polynomial:
    total = ring.zero()
    for p in items:
        total = total + p
    return total
