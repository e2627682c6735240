from fractions import Fraction

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from fcc.poly import (ClosednessError, DimensionError, JetOrderError, PolyRing, Q, gradient,
                      integrate_radial, is_closed)
from fcc.ratexpr import PoleError, RationalExpr, lift

from conftest import to_sympy

R3 = PolyRing(3)
u1, u2, u3 = R3.coords()
SYMS = sympy.symbols("u1 u2 u3")

exponents = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=6).map(R3.from_dict)
points = st.tuples(*[st.fractions(min_value=-4, max_value=4, max_denominator=5)] * 3)


def test_q_accepts_exact_values_only():
    assert Q(3) == mpq(3)
    assert Q(Fraction(1, 2)) == mpq(1, 2)
    assert Q("-3/4") == mpq(-3, 4)
    with pytest.raises((TypeError, ValueError)):
        Q(0.5)
    with pytest.raises((TypeError, ValueError)):
        Q(True)


def test_product_and_partial():
    assert (u1 + u2) * (u1 - u2) == u1 ** 2 - u2 ** 2
    assert (u1 * u2 ** 2).diff(1) == (u1 * u2).scale(2)
    assert str(u1 * u2 ** 2 - u3.scale(Q("1/2"))) == "u1*u2^2 - 1/2*u3"


def test_integrate_radial_examples():
    R2 = PolyRing(2)
    v1, v2 = R2.coords()
    assert integrate_radial([v2, v1]) == v1 * v2
    assert integrate_radial([v2, v1 - v2]) == v1 * v2 - (v2 ** 2).scale(Q("1/2"))
    with pytest.raises(ClosednessError) as info:
        integrate_radial([v2, R2.zero()])
    assert info.value.pair == (0, 1)
    with pytest.raises(DimensionError):
        integrate_radial([v1])


def test_rational_cancellation_and_evaluation():
    a = RationalExpr.frac(u1, u1 - u3) + RationalExpr.frac(u3, u3 - u1)
    assert a == lift(1, R3)
    b = RationalExpr.frac(u1, u2)
    assert b.evaluate([3, 2, 0]) == mpq(3, 2)
    with pytest.raises(PoleError):
        b.evaluate([3, 0, 1])
    with pytest.raises(ZeroDivisionError):
        b / lift(0, R3)


def test_jets_differentiate_through_chain_rule():
    R = PolyRing(2, jets=[("F", 0, 2)])
    F, F1, F2 = R.var("F"), R.var("F_1"), R.var("F_2")
    x, y = R.coords()
    assert (F * y).diff(0) == F1 * y
    assert (F * y).diff(1) == F
    assert (F1 ** 2).diff(0) == (F1 * F2).scale(2)
    with pytest.raises(JetOrderError):
        F2.diff(0)


def test_ring_mismatch_is_rejected():
    with pytest.raises(DimensionError):
        u1 + PolyRing(2).coord(0)


@settings(max_examples=200, deadline=None)
@given(polys, polys, st.integers(0, 2))
def test_leibniz(p, q, k):
    assert (p * q).diff(k) == p.diff(k) * q + p * q.diff(k)


@settings(max_examples=200, deadline=None)
@given(polys, st.integers(0, 2), st.integers(0, 2))
def test_mixed_partials_commute(p, i, j):
    assert p.diff(i).diff(j) == p.diff(j).diff(i)


@settings(max_examples=200, deadline=None)
@given(polys, polys, points)
def test_evaluation_is_a_ring_homomorphism(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


@settings(max_examples=100, deadline=None)
@given(polys)
def test_radial_integration_inverts_the_gradient(p):
    p0 = p - p.constant_term()
    assert is_closed(gradient(p0)) is None
    assert integrate_radial(gradient(p0)) == p0


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_arithmetic_agrees_with_sympy(p, q):
    assert sympy.expand(to_sympy(p * q - q.diff(0)) - (to_sympy(p) * to_sympy(q)
                        - sympy.diff(to_sympy(q), SYMS[0]))) == 0


@settings(max_examples=60, deadline=None)
@given(polys, polys.filter(lambda q: not q.is_zero()), st.integers(0, 2))
def test_quotient_rule_agrees_with_sympy(p, q, k):
    f = RationalExpr.frac(p, q)
    expected = sympy.diff(to_sympy(p) / to_sympy(q), SYMS[k])
    assert sympy.simplify(to_sympy(f.diff(k)) - expected) == 0
