import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from fcc.a0 import (A0Family, build_a0, build_single_block, build_single_block_literal,
                    check_master, check_system_form, cross_block_hessian, is_linear, jet_ring,
                    linear_a0, partial_bridge, symbolic_functions)
from fcc.core import JordanSpec
from fcc.parse import parse_expr
from fcc.poly import PolyRing, Q

from conftest import random_family, specs_up_to

GENERAL_FORMS = {
    (2,): "F1*u2 + F2",
    (3,): "F1*u3 + F1_1*u2^2/2 + F2*u2 + F3",
    (4,): "u4*F1 + u3*F2 + u2*F3 + F4 + u2*u3*F1_1 + u2^2*F2_1/2 + u2^3*F1_2/6",
    (2, 1): "F1*u2 + F2 + F3",
    (2, 2): "F1*u2 + F2 + F3*u4 + F4",
    (2, 1, 1): "F1*u2 + F2 + F3 + F4",
}


@pytest.mark.parametrize("blocks", list(GENERAL_FORMS), ids=str)
def test_general_solution_forms(blocks):
    spec = JordanSpec(blocks)
    ring = jet_ring(spec, order=4)
    a0 = build_a0(spec, symbolic_functions(spec, ring), ring)
    assert parse_expr(GENERAL_FORMS[blocks], ring).as_poly() == a0
    assert not check_master(spec, a0)


def test_family_example_and_shape_errors():
    spec = JordanSpec((2,))
    a0 = build_a0(spec, A0Family((((0, 1), (0,)),)))
    u1, u2 = a0.ring.coords()
    assert a0 == u1 * u2
    assert A0Family((((0, 1), (0,)),)).to_json() == {"blocks": [[[0, 1], [0]]]}
    with pytest.raises(ValueError):
        build_a0(spec, A0Family((((1,),),)))


def test_linear_seeds():
    spec = JordanSpec((2, 1))
    ring = spec.ring()
    u1, u2, u3 = ring.coords()
    assert linear_a0(spec, [1, 1]) == u1.scale(2) + u3
    assert linear_a0(spec, [1, 2, 3]) == u1 + u2.scale(2) + u3.scale(3)
    with pytest.raises(ValueError):
        linear_a0(spec, [1, 2, 3, 4])


def test_master_residual_examples():
    spec = JordanSpec((2,))
    ring = spec.ring()
    u1, u2 = ring.coords()
    assert check_master(spec, u1 * u2) == {}
    assert check_master(spec, u2 ** 2) == {(0, 1): u2.scale(2)}
    spec = JordanSpec((2, 1))
    ring = spec.ring()
    u1, u2, u3 = ring.coords()
    assert check_master(spec, u1 * u3) == {(0, 2): u1 - u3}


def test_system_form_examples():
    R2, R3 = PolyRing(2), PolyRing(3)
    assert check_system_form(2, R2.coord(1) ** 2) == [("zero", (2, 2))]
    assert ("zero", (2, 3)) in check_system_form(3, R3.coord(1) * R3.coord(2))
    R4 = PolyRing(4)
    a0 = build_single_block(4, [R4.coord(0), R4.zero(), R4.zero(), R4.zero()], R4)
    assert check_system_form(4, a0) == []


def test_is_linear():
    ring = PolyRing(2, params=["e1", "e2"])
    u1, u2 = ring.coords()
    assert is_linear(ring.var("e1") * u1 + ring.var("e2") * u2)
    assert not is_linear(u1 * u2)
    assert is_linear(ring.const(7))


def test_partial_bridge_examples():
    R = PolyRing(4)
    u1, u2 = R.coord(0), R.coord(1)
    F = [u1 ** 3, u1 ** 2 + 1, u1, R.const(2)]
    lhs, rhs, ok = partial_bridge(4, F, 1, R)
    assert ok and lhs == F[0]
    lhs, rhs, ok = partial_bridge(4, F, 2, R)
    assert ok and lhs == F[1] + u2 * F[0].diff(0)
    R3 = PolyRing(3)
    v1 = R3.coord(0)
    assert partial_bridge(3, [v1 ** 2, v1, R3.zero()], 3, R3)[2]
    with pytest.raises(ValueError):
        partial_bridge(3, [v1, v1, v1], 4, R3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_grouped_sum_matches_literal_sum(n):
    rng = random.Random(n)
    ring = jet_ring(JordanSpec((n,)))
    F = symbolic_functions(JordanSpec((n,)), ring)[0]
    assert build_single_block(n, F, ring) == build_single_block_literal(n, F, ring)
    coeffs = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(n)]
    assert build_single_block(n, coeffs) == build_single_block_literal(n, coeffs)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(specs_up_to(5)), st.randoms(use_true_random=False))
def test_built_seeds_solve_the_master_equation(spec, rnd):
    a0 = build_a0(spec, random_family(spec, rnd))
    assert check_master(spec, a0) == {}
    assert cross_block_hessian(spec, a0) == {}


def test_cross_block_coupling_is_not_a_solution():
    spec = JordanSpec((1, 1, 1))
    ring = spec.ring()
    u1, u2, u3 = ring.coords()
    f = u1 * u2 + u3
    assert cross_block_hessian(spec, f) == {(0, 1): ring.one()}
    assert check_master(spec, f)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_master_and_system_form_agree_on_monomials(n):
    ring = PolyRing(n)
    for deg in range(5):
        for combo in combinations_with_replacement(range(n), deg):
            m = ring.one()
            for i in combo:
                m = m * ring.coord(i)
            assert (not check_master(JordanSpec((n,)), m)) == (not check_system_form(n, m)), str(m)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 4), st.data())
def test_master_and_system_form_agree_on_combinations(n, data):
    ring = PolyRing(n)
    monos = [combo for deg in range(5) for combo in combinations_with_replacement(range(n), deg)]
    chosen = data.draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4))
    f = ring.zero()
    for combo in chosen:
        m = ring.const(data.draw(st.integers(-3, 3)))
        for i in combo:
            m = m * ring.coord(i)
        f = f + m
    assert (not check_master(JordanSpec((n,)), f)) == (not check_system_form(n, f))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.data())
def test_dimension_bridge(n, data):
    ring = PolyRing(n)
    F = [ring.univariate([data.draw(st.integers(-4, 4)) for _ in range(4)], 0) for _ in range(n)]
    for k in range(1, n + 1):
        assert partial_bridge(n, F, k, ring)[2]


def test_rational_family_coefficients():
    fam = A0Family((((Q("1/2"), 0, "3/4"),),))
    assert build_a0(JordanSpec((1,)), fam) == PolyRing(1).univariate([Q("1/2"), 0, Q("3/4")], 0)
