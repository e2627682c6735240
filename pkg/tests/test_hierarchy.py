import pytest
from hypothesis import given, settings, strategies as st

from fcc.a0 import build_a0
from fcc.core import JordanSpec, canonical_structure, circ, d_L_function, identity, is_zero_tensor, matmul, matsub
from fcc.hierarchy import SeedError, check_commutation, generate, independence_det, next_a, next_V
from fcc.parse import parse_expr
from fcc.ratexpr import lift

from conftest import random_family, specs_up_to


def seed(blocks, text):
    spec = JordanSpec(blocks)
    return spec, parse_expr(text, spec.ring()).as_poly()


def test_first_step_examples():
    spec, a0 = seed((1, 1), "u1 + u2")
    h = generate(spec, a0, 2)
    assert h.a[1] == parse_expr("-u1*u2", a0.ring).as_poly()
    assert is_zero_tensor(h.V[2])
    spec, a0 = seed((2,), "u2")
    assert next_a(spec, a0, a0) == parse_expr("u1*u2 - u2^2/2", a0.ring).as_poly()
    spec, a0 = seed((2, 1), "0")
    assert next_a(spec, a0, a0).is_zero()


def test_operators_follow_the_recursion():
    spec, a0 = seed((3,), "u1*u3 + u2^2/2 + u2")
    ring = a0.ring
    _, e, E, L = canonical_structure(spec, ring)
    h = generate(spec, a0, 2)
    I = h.V[0]
    assert h.V[1] == matsub(L, [[lift(a0, ring) * x for x in row] for row in I])
    L2 = matmul(L, L)
    expected = [[L2[i][j] - lift(a0, ring) * L[i][j] - (lift(h.a[1], ring) if i == j else 0 * L[0][0])
                 for j in range(3)] for i in range(3)]
    assert h.V[2] == expected
    assert h.X[1] == [x - lift(a0, ring) * y for x, y in zip(E, e)]
    assert next_V(h.V[1], L, h.a[1]) == h.V[2]
    E2 = circ(E, E, canonical_structure(spec, ring)[0])
    assert h.X[2] == [p - lift(a0, ring) * q - lift(h.a[1], ring) * r for p, q, r in zip(E2, E, e)]


def test_zero_seed_gives_powers_of_euler():
    spec, a0 = seed((2,), "0")
    h = generate(spec, a0, 1)
    assert h.X[1] == canonical_structure(spec, a0.ring)[2]


def test_invalid_seed():
    spec, a0 = seed((2,), "u2^2")
    with pytest.raises(SeedError):
        generate(spec, a0, 3)
    _, _, _, L = canonical_structure(spec, a0.ring)
    V1 = next_V(identity(2, a0.ring), L, a0)
    assert check_commutation(V1, L)
    with pytest.raises(ValueError):
        generate(spec, a0, -1)


def test_commutation_examples():
    spec, a0 = seed((3,), "u1^2*u3 + u1*u2^2 + u1*u2 + u1")
    h = generate(spec, a0, 3)
    assert check_commutation(h.V[1], h.V[1]) == {}
    assert check_commutation(h.V[1], h.V[2]) == {}


def test_independence_examples():
    spec, a0 = seed((1, 1), "u1 + 2*u2")
    dx, de = independence_det(generate(spec, a0))
    assert dx == de == parse_expr("u2 - u1", a0.ring)
    spec, a0 = seed((2,), "u1*u2")
    dx, de = independence_det(generate(spec, a0))
    assert dx == de == parse_expr("u2", a0.ring)
    with pytest.raises(ValueError):
        independence_det(generate(spec, a0, 0))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(specs_up_to(3)), st.randoms(use_true_random=False))
def test_recursion_identity_and_commutation(spec, rnd):
    a0 = build_a0(spec, random_family(spec, rnd))
    h = generate(spec, a0, 3)
    ring = a0.ring
    _, _, _, L = canonical_structure(spec, ring)
    for k in range(3):
        lhs = [lift(h.a[k + 1].diff(i), ring) for i in range(spec.n)]
        dl = d_L_function(h.a[k], L)
        assert lhs == [x - lift(h.a[k] * a0.diff(i), ring) for i, x in enumerate(dl)]
        assert h.a[k + 1].evaluate([0] * ring.nvars) == 0
    for i in range(4):
        for j in range(i + 1, 4):
            assert check_commutation(h.V[i], h.V[j]) == {}
    dx, de = independence_det(h if h.depth >= spec.n - 1 else generate(spec, a0))
    assert (dx - de).is_zero()
