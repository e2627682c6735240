import random

import pytest
import sympy

from fcc.a0 import A0Family, build_a0, is_linear
from fcc.core import JordanSpec

# Jordan types with a non-trivial block, dimensions 2 to 4.
TABLE_SPECS = [(2,), (3,), (2, 1), (4,), (3, 1), (2, 2), (2, 1, 1)]


def partitions(n, cap=None):
    """Block-size tuples in non-increasing order summing to ``n``."""
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for p in range(min(n, cap), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


def specs_up_to(nmax):
    return [JordanSpec(bs) for n in range(1, nmax + 1) for bs in partitions(n)]


def random_family(spec, rng, degree=2, lo=-3, hi=3):
    return A0Family(tuple(
        tuple(tuple(rng.randint(lo, hi) for _ in range(degree + 1)) for _ in range(m))
        for m in spec.block_sizes))


def random_nonlinear_a0(spec, rng, degree=2):
    while True:
        a0 = build_a0(spec, random_family(spec, rng, degree))
        if not is_linear(a0):
            return a0


def to_sympy(x):
    """Independent representation of a polynomial or rational expression."""
    return sympy.sympify(str(x).replace("^", "**"))


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(number, ok, detail)``."""
    def record(number, ok, detail):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
