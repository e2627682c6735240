"""Reference tables for the seven regular Jordan types of dimension 2, 3 and 4.

Each case records, as printed in the reference tables:

* ``a0``: the general solution in terms of ``F1..Fn`` (``Fk_d`` is the
  ``d``-th derivative of ``Fk`` with respect to its block's first coordinate);
* ``gamma``: Christoffel symbols of the compatible connection, with
  ``d1..dn`` standing for the partial derivatives of ``a0``;
* ``dual``: Christoffel symbols of the dual connection for
  ``a0 = e1*u1 + ... + en*un``;
* ``metric``: an invariant metric for ``a0 = sum eps_alpha u^{1(alpha)}``,
  with constants ``C1..C3`` and functions ``F1..F3`` of the indicated
  coordinate, instantiated at parameter values that make every exponent an
  integer.

Chained equalities such as ``G^1_{23} = -(u2/u3) G^2_{23} = G^2_{33} = d3/u2``
are stored as a :class:`Chain`: a common value and a list of
``(coefficient, "i,j,k")`` links, meaning ``coefficient * G^i_{jk} = value``.
Index labels are 1-based.

``ERRATA`` lists entries whose printed form is inconsistent with the
defining equations, together with the corrected value (see
:func:`fcc.verify.verify_case`, which checks both claims).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Chain:
    value: str
    links: tuple

    @staticmethod
    def of(value: str, *links) -> "Chain":
        out = []
        for link in links:
            out.append(("1", link) if isinstance(link, str) else tuple(link))
        return Chain(value, tuple(out))


def single(key: str, value: str) -> Chain:
    return Chain.of(value, key)


@dataclass(frozen=True)
class MetricFixture:
    instances: tuple    # parameter choices {1-based main coordinate: eps}, all exponents integral
    params: tuple       # constant names
    functions: tuple    # (name, 1-based coordinate) pairs
    entries: dict       # "i,j" (i <= j) -> expression in eps names e1..e4; other entries zero


@dataclass(frozen=True)
class Case:
    id: str
    blocks: tuple
    a0: str
    gamma: tuple
    dual: tuple
    metric: MetricFixture


C = Chain.of

CASE_2 = Case(
    id="2",
    blocks=(2,),
    a0="F1*u2 + F2",
    gamma=(
        single("1,2,2", "d2/u2"),
        single("2,2,2", "-d1/u2"),
    ),
    dual=(
        single("1,1,1", "(e2*u2 - u1)/u1^2"),
        single("1,1,2", "-e2/u1"),
        single("1,2,2", "e2/u2"),
        single("2,1,1", "u2*(1 - e1)/u1^2"),
        single("2,1,2", "(e1 - 1)/u1"),
        single("2,2,2", "-e1/u2"),
    ),
    metric=MetricFixture(
        instances=({1: -1}, {1: 2}),
        params=("C1",),
        functions=(("F1", 2),),
        entries={"1,1": "F1", "1,2": "C1*u2^(-e1)"},
    ),
)

CASE_3 = Case(
    id="3",
    blocks=(3,),
    a0="F1*u3 + 1/2*F1_1*u2^2 + F2*u2 + F3",
    gamma=(
        single("1,2,2", "(d2 - u3/u2*d3)/u2"),
        C("d3/u2", "1,2,3", ("-u2/u3", "2,2,3"), "2,3,3"),
        single("2,2,2", "(u3^2/u2^2*d3 - d1)/u2"),
        C("u3/u2^2*(d1 - u3/u2*d2)", "3,2,2", ("-u3/u2", "3,2,3")),
        single("3,3,3", "-d2/u2"),
    ),
    dual=(
        single("1,1,1", "(e2*u1*u2 + e3*(u1*u3 - u2^2) - u1^2)/u1^3"),
        single("1,1,2", "-(e2*u1 - e3*u2)/u1^2"),
        single("1,1,3", "-e3/u1"),
        single("1,2,2", "(e2*u1*u2 - e3*(u1*u3 + u2^2))/(u1*u2^2)"),
        single("1,2,3", "e3/u2"),
        C("(1 - e1)*u2/u1^2", "2,1,1", "3,1,2"),
        C("(e1 - 1)/u1", "2,1,2", "3,1,3"),
        single("2,2,2", "-(e1*u2^2 - e3*u3^2)/u2^3"),
        single("2,2,3", "-e3*u3/u2^2"),
        single("2,3,3", "e3/u2"),
        single("3,1,1", "(1 - e1)*(u1*u3 - u2^2)/u1^3"),
        single("3,2,2", "(e1*u2*(u1*u3 + u2^2) - e2*u1*u3^2 - u2^3)/(u1*u2^3)"),
        single("3,2,3", "-(e1*u2 - e2*u3)/u2^2"),
        single("3,3,3", "-e2/u2"),
    ),
    metric=MetricFixture(
        instances=({1: 3}, {1: -3}),
        params=("C1",),
        functions=(("F1", 2), ("F2", 2)),
        entries={
            "1,1": "2/9*C1*e1*(e1 - 3/2)*u2^(-2 - 4*e1/3)*u3^2 + 2*F1_1*u3 + 2*e1*F1*u3/u2 + F2",
            "1,2": "-2/3*C1*e1*u2^(-1 - 4*e1/3)*u3 + F1",
            "1,3": "C1*u2^(-4*e1/3)",
            "2,2": "C1*u2^(-4*e1/3)",
        },
    ),
)

CASE_21 = Case(
    id="21",
    blocks=(2, 1),
    a0="F1*u2 + F2 + F3",
    gamma=(
        C("-d3/(u1 - u3)",
          "1,1,1", ("-1", "1,1,3"), ("-1", "1,3,3"), ("(u1 - u3)/u2", "2,1,1"), ("-1", "2,1,2"),
          ("-(u1 - u3)/u2", "2,1,3"), "2,2,3", ("(u1 - u3)/u2", "2,3,3")),
        C("d2/u2", "1,2,2", ("(u1 - u3)/u2", "3,1,2"), ("-(u1 - u3)/u2", "3,2,3")),
        single("2,2,2", "-d1/u2"),
        C("(d1 - u2/(u1 - u3)*d2)/(u1 - u3)", "3,1,1", ("-1", "3,1,3"), "3,3,3"),
    ),
    dual=(
        single("1,1,1", "(e2*u2*(u1 - u3) - e3*u1*u3 - u1^2 + u1*u3)/(u1^2*(u1 - u3))"),
        single("1,1,2", "-e2/u1"),
        single("1,1,3", "e3/(u1 - u3)"),
        single("1,2,2", "e2/u2"),
        single("2,1,1", "-((e1 - 1)*(u1 - u3)^2 - e3*u3*(2*u1 - u3))*u2/u1^2"),
        single("2,1,2", "(e1*(u1 - u3) - e3*u3 - u1 + u3)/(u1*(u1 - u3))"),
        single("2,2,2", "-e1/u2"),
        single("2,2,3", "-e3/(u1 - u3)"),
        single("2,3,3", "e3*u2/(u1 - u3)^2"),
        single("3,1,1", "(e1*u1*(u1 - u3) - e2*u2*(2*u1 - u3))*u3/(u1^2*(u1 - u3)^2)"),
        single("3,1,2", "-e2*u3/(u1*(u1 - u3))"),
        single("3,1,3", "-(e1*(u1 - u3) - e2*u2)/(u1 - u3)^2"),
        single("3,2,3", "-e2/(u1 - u3)"),
        single("3,3,3", "(e1*u1*(u1 - u3) - e2*u2*u3 - (u1 - u3)^2)/(u3*(u1 - u3)^2)"),
    ),
    metric=MetricFixture(
        instances=({1: 1, 3: 1}, {1: 2, 3: "1/2"}),
        params=("C1", "C2"),
        functions=(("F1", 2),),
        entries={
            "1,1": "F1*(u3 - u1)^(-2*e3) + C1*u2^(1 - e1)*(u3 - u1)^(-2*e3 - 1)",
            "1,2": "C1/(2*e3)*u2^(-e1)*(u3 - u1)^(-2*e3)",
            "3,3": "C2*(u1 - u3)^(-2*e1)",
        },
    ),
)

CASE_4 = Case(
    id="4",
    blocks=(4,),
    a0="(F1_1*u2 + F2)*u3 + F1*u4 + 1/6*F1_2*u2^3 + 1/2*F2_1*u2^2 + F3*u2 + F4",
    gamma=(
        single("1,2,2", "(d2 - u3/u2*d3 + (u3^2/u2 - u4)/u2*d4)/u2"),
        single("1,2,3", "(d3 - u3/u2*d4)/u2"),
        C("d4/u2", "1,2,4", "1,3,3", ("-u2/u3", "2,2,4"), "2,3,4", ("u2^2/(u3^2 - u2*u4)", "3,2,4"),
          ("-u2/u3", "3,3,4"), "3,4,4"),
        single("2,2,2", "(-d1 + u3^2/u2^2*d3 + 2*u3/u2^2*(u4 - u3^2/u2)*d4)/u2"),
        single("2,2,3", "(-u3*d3 + (2*u3^2/u2 - u4)*d4)/u2^2"),
        single("2,3,3", "(d3 - 2*u3/u2*d4)/u2"),
        single("3,2,2", "(u3*d1 - u3^2/u2*d2 + (2*u3^4/u2^2 - 3*u3^2*u4/u2 + u4^2)/u2*d4)/u2^2"),
        single("3,2,3", "(-d1 + u3/u2*d2 + u3/u2^2*(u4 - u3^2/u2)*d4)/u2"),
        single("3,3,3", "(-d2 + (2*u3^2/u2 - u4)/u2*d4)/u2"),
        single("4,2,2", "(u2*u4 - u3^2)/u2^3*(d1 - 2*u3/u2*d2 + (2*u3^2/u2 - u4)/u2*d3)"),
        single("4,2,3", "(u3*d1 + (u4 - 2*u3^2/u2)*d2 + 2/u2*(u3^3/u2 - u3*u4)*d3)/u2^2"),
        single("4,2,4", "(-d1 + u3/u2*d2 + (u4 - u3^2/u2)/u2*d3)/u2"),
        single("4,3,3", "(-d1 + 2*u3/u2*d2 + (u4 - 2*u3^2/u2)/u2*d3)/u2"),
        single("4,3,4", "(-d2 + u3/u2*d3)/u2"),
        single("4,4,4", "-d3/u2"),
    ),
    dual=(
        single("1,1,1", "(e2*u1^2*u2 + e3*u1*(u1*u3 - u2^2) + e4*u2*(u1*u2 + u2^2 - 2*u3) - u1^3)/u1^4"),
        single("1,1,2", "-(e2*u1^2 - e3*u1*u2 - e4*(u1*u3 - u2^2))/u1^3"),
        single("1,1,3", "-(e3*u1 - e4*u2)/u1^2"),
        single("1,1,4", "-e4/u1"),
        single("1,2,2", "(e2*u1^2*u2^2 - e3*u1*u2*(u1*u3 + u2^2) - e4*(u1^2*(u2*u4 - u3^2) - u2^4))/(u1^2*u2^3)"),
        single("1,2,3", "(e3*u1*u2 - e4*(u1*u3 + u2^2))/(u1*u2^2)"),
        C("e4/u2", "1,2,4", "1,3,3", "2,3,4", "3,4,4"),
        C("(1 - e1)*u2/u1^2", "2,1,1", "3,1,2", "4,1,3"),
        C("(e1 - 1)/u1", "2,1,2", "3,1,3", "4,1,4"),
        C("-(e1*u2^3 - e3*u2*u3^2 - 2*e4*u3*(u2*u4 - u3^2))/u2^4", "2,2,2", "3,2,3"),
        single("3,1,2", "-e2*u3/(u1*(u1 - u3))"),
        single("2,2,3", "-(e3*u2*u3 + e4*(u2*u4 - 2*u3^2))/u2^3"),
        C("-e4*u3/u2^2", "2,2,4", "3,3,4"),
        single("2,3,3", "(e3*u2 - 2*e4*u3)/u2^2"),
        C("(1 - e1)*(u1*u3 - u2^2)/u1^3", "3,1,1", "4,1,2"),
        single("3,2,2", "(e1*u2^3*(u1*u3 + u2^2) - e2*u1*u2^2*u3^2"
                        " + e4*u1*(u2*u4 - u3^2)*(u2*u4 - 2*u3^2) - u2^5)/(u1*u2^5)"),
        single("3,2,4", "-e4*(u2*u4 - u3^2)/u2^3"),
        single("3,3,3", "-(e2*u2^2 + e4*(u2*u4 - 2*u3^2))/u2^3"),
        single("4,1,1", "(1 - e1)*(u1^2*u4 - 2*u1*u2*u3 + u2^3)/u1^4"),
        single("4,2,2", "(e1*u1^2*u2^3*u4 - e1*u2^2*(u1^2*u3^2 + u2^4) - 2*e2*u1^2*u2*u3*(u2*u4 - u3^2)"
                        " - e3*u1^2*(u2*u4 - u3^2)*(u2*u4 - 2*u3^2) + u2^6)/(u1^2*u2^5)"),
        single("4,2,3", "(e1*u2^2*(u1*u3 + u2^2) + e2*u1*u2*(u2*u4 - 2*u3^2)"
                        " - 2*e3*u1*u3*(u2*u4 - u3^2) - u2^4)/(u1*u2^4)"),
        single("4,2,4", "-(e1*u2^2 - e2*u2*u3 - e3*(u2*u4 - u3^2))/u2^3"),
        single("4,3,3", "-(e1*u2^2 - 2*e2*u2*u3 - e3*(u2*u4 - 2*u3^2))/u2^3"),
        single("4,3,4", "-(e2*u2 - e3*u3)/u2^2"),
        single("4,4,4", "-e3/u2"),
    ),
    metric=MetricFixture(
        instances=({1: 2}, {1: -2}),
        params=("C1",),
        functions=(("F1", 2), ("F2", 2), ("F3", 2)),
        entries={
            "1,1": ("-1/6*C1*e1*(e1 - 2)*(e1 + 2)*u2^(-3*e1/2 - 3)*u3^3"
                    " + 1/2*C1*e1*(e1 - 2)*u2^(-3*e1/2 - 2)*u3*u4"
                    " + 2*F1_2*u3^2 + (4*e1*u3^2/u2 + 3*u4)*F1_1 + 2*F2_1*u3"
                    " + e1*u2^(-2)*(2*e1*u3^2 + 4*u2*u4 - 3*u3^2)*F1 + 2*e1*u3/u2*F2 + F3"),
            "1,2": "1/2*C1*e1*u2^(-3*e1/2 - 1)*(e1*u3^2/u2 - u4) + 2*(F1_1 + e1/u2*F1)*u3 + F2",
            "1,3": "-C1*e1*u2^(-3*e1/2 - 1)*u3 + F1",
            "1,4": "C1*u2^(-3*e1/2)",
            "2,2": "-C1*e1*u2^(-3*e1/2 - 1)*u3 + F1",
            "2,3": "C1*u2^(-3*e1/2)",
        },
    ),
)

CASE_31 = Case(
    id="31",
    blocks=(3, 1),
    a0="F1*u3 + 1/2*F1_1*u2^2 + F2*u2 + F3 + F4",
    gamma=(
        C("-d4/(u1 - u4)",
          "1,1,1", ("-1", "1,1,4"), "1,4,4", ("-(u1 - u4)/u2", "2,1,1"), "2,1,2",
          ("(u1 - u4)/u2", "2,1,4"), ("-1", "2,2,4"), ("-(u1 - u4)/u2", "2,4,4"),
          ("-(u1 - u4)^2/(u3*(u1 - u4) - u2^2)", "3,1,1"), ("-(u1 - u4)/u2", "3,1,2"), "3,1,3",
          ("(u1 - u4)^2/(u3*(u1 - u4) - u2^2)", "3,1,4"), ("(u1 - u4)/u2", "3,2,4"), ("-1", "3,3,4"),
          ("-(u1 - u4)^2/(u3*(u1 - u4) - u2^2)", "3,4,4")),
        single("1,2,2", "(d2 - u3/u2*d3)/u2"),
        C("d3/u2", "1,2,3", ("-u2/u3", "2,2,3"), "2,3,3", ("(u1 - u4)/u2", "4,1,3"),
          ("(u1 - u4)/u2", "4,2,2"), ("-(u1 - u4)/u2", "4,3,4")),
        single("2,2,2", "(-d1 + u3^2/u2^2*d3)/u2"),
        single("3,2,2", "u3/u2^2*(d1 - u3/u2*d2) - d4/(u1 - u4)"),
        single("3,2,3", "(-d1 + u3/u2*d2)/u2"),
        single("3,3,3", "-d2/u2"),
        C("(d1 - u2/(u1 - u4)*d2 + (u2^2 - u3*(u1 - u4))/(u1 - u4)^2*d3)/(u1 - u4)",
          "4,1,1", ("-1", "4,1,4"), "4,4,4"),
        C("(d2 - u2/(u1 - u4)*d3)/(u1 - u4)", "4,1,2", ("-1", "4,2,4")),
    ),
    dual=(
        single("1,1,1", "(e2*u1*u2*(u1 - u4) + e3*(u1*u3 - u2^2)*(u1 - u4) - e4*u1^2*u4 - u1^3 + u1^2*u4)"
                        "/(u1^3*(u1 - u4))"),
        single("1,1,2", "-(e2*u1 - e3*u2)/u1^2"),
        single("1,1,3", "-e3/u1"),
        single("1,1,4", "e4/(u1 - u4)"),
        single("1,2,2", "(e2*u1*u2 - e3*(u1*u3 + u2^2))/(u1*u2^2)"),
        single("1,2,3", "e3/u2"),
        single("1,4,4", "-e4*u1/(u4*(u1 - u4))"),
        C("-u2*(e1*(u1 - u4)^2 - e4*u4*(2*u1 - u4) - (u1 - u4)^2)/(u1^2*(u1 - u4)^2)", "2,1,1", "3,1,2"),
        single("2,1,2", "(e1*(u1^2 - u4) - e4*u4 - (u1 - u4))/(u1*(u1 - u4))"),
        single("2,1,4", "-e4*u2/(u1 - u4)^2"),
        single("2,2,2", "-(e1*u2^2 - e3*u3^2)/u2^3"),
        single("2,2,3", "-e3*u3/u2^2"),
        C("e4/(u1 - u4)", "2,2,4", "3,3,4"),
        single("2,3,3", "e3/u2"),
        single("2,4,4", "e4*u2/(u1 - u4)^2"),
        single("3,1,1", "-(e1*(u1 - u4)^3*(u1*u3 - u2^2)"
                        " - e4*u4*((u1*u3 - u2^2)*(u1 - u4)^2 - u1*(u1*u3 - u2^2)*(u1 - u4) + u1^2*u2^2*u4)"
                        " - (u1 - u4)^3*(u1*u3 - u2^2))/(u1^3*(u1 - u4)^3)"),
        single("3,2,2", "(e1*u2*(u1 - u4)*(u1*u3 + u2^2) - e2*u1*u3^2*(u1 - u4) - e4*u2^3*u4"
                        " - u2^3*(u1 - u4))/(u1*u2^3*(u1 - u4))"),
        single("3,2,3", "-(e1*u2 - e2*u3)/u2^2"),
        single("3,3,3", "-e2/u2"),
        single("3,4,4", "e4*(u3*(u1 - u4) - u2^2)/(u1 - u4)^3"),
        single("4,1,1", "e4*(e1*u1^2*(u1 - u4)^2 - e2*u1*u2*(u1 - u4)*(2*u1 - u4)"
                        " - e3*(u4*(u1 - u4)*(u1*u3 - u2^2) - 2*u1^2*(u1*u3 - u2^2) + u1^2*(2*u3*u4 + u2^2)))"
                        "/(u1^3*(u1 - u4)^3)"),
        single("4,1,2", "u4*(e2*u1*(u1 - u4) - e3*u2*(2*u1 - u4))/(u1^2*(u1 - u4)^2)"),
        C("e3*u4/(u1*(u1 - u4))", "4,1,3", "4,2,2"),
        single("4,1,4", "-(e1*(u1 - u4)^2 - e2*u2*(u1 - u4) - e3*(u1*u3 - u2^2 - u3*u4))/(u1 - u4)^3"),
        single("4,2,4", "-(e2*(u1 - u4) - e3*u2)/(u1 - u4)^2"),
        single("4,3,4", "-e3/(u1 - u4)"),
        single("4,4,4", "(e1*u1*(u1 - u4)^2 - e2*u2*u4*(u1 - u4) - e3*u4*(u3*(u1 - u4) - u2^2)"
                        " - (u1 - u4)^3)/(u4*(u1 - u4)^3)"),
    ),
    metric=MetricFixture(
        instances=({1: 3, 4: 1}, {1: -3, 4: "1/2"}),
        params=("C1", "C2"),
        functions=(("F1", 2), ("F2", 2)),
        entries={
            "1,1": ("(u1 - u4)^(-2*e4)*(2/9*C1*e1*(e1 - 3/2)*u2^(-4*e1/3 - 2)*u3^2 + 2*F1_1*u3"
                    " + 2*e1*u3/u2*F1 + F2)"
                    " + (u1 - u4)^(-2*e4 - 1)*(4/3*C1*e4*(e1 - 3/2)*u2^(-4*e1/3)*u3 - 2*e4*u2*F1)"
                    " + (u1 - u4)^(-2*e4 - 2)*(C1*e4*(2*e4 + 1)*u2^(-4*e1/3 + 2))"),
            "1,2": ("-2*C1*e4*u2^(-4*e1/3 + 1)*(u1 - u4)^(-2*e4 - 1)"
                    " - 2/3*C1*e1*u2^(-4*e1/3 - 1)*u3*(u1 - u4)^(-2*e4) + (u1 - u4)^(-2*e4)*F1"),
            "1,3": "C1*u2^(-4*e1/3)*(u1 - u4)^(-2*e4)",
            "2,2": "C1*u2^(-4*e1/3)*(u1 - u4)^(-2*e4)",
            "4,4": "C2*(u1 - u4)^(-2*e1)",
        },
    ),
)

CASE_22 = Case(
    id="22",
    blocks=(2, 2),
    a0="F1*u2 + F2 + F3*u4 + F4",
    gamma=(
        C("-(d3 + u4/(u1 - u3)*d4)/(u1 - u3)", "1,1,1", ("-1", "1,1,3"), "1,3,3", "2,1,2", ("-1", "2,2,3")),
        C("d4/(u1 - u3)", "1,1,4", ("-1", "1,3,4"), ("-(u1 - u3)/u2", "2,1,4"), "2,2,4",
          ("(u1 - u3)/u2", "2,3,4"), ("u4/(u1 - u4)", "3,4,4")),
        C("d2/u2", "1,2,2", ("(u1 - u3)/u2", "3,1,2"), ("-(u1 - u3)/u2", "3,2,3"),
          ("(u1 - u3)^2/(u2*u4)", "4,1,2"), ("-(u1 - u3)^2/(u2*u4)", "4,2,3"), ("-(u1 - u3)/u2", "4,2,4")),
        C("u2/(u1 - u3)^2*(d3 + 2*u4/(u1 - u3)*d4)", "2,1,1", ("-1", "2,1,3"), "2,3,3"),
        single("2,2,2", "-d1/u2"),
        C("(d1 - u2/(u1 - u3)*d2)/(u1 - u3)", "3,1,1", ("-1", "3,1,3"), "3,3,3", ("-1", "4,1,4"), "4,3,4"),
        C("u4/(u1 - u3)^2*(d1 - 2*u2/(u1 - u3)*d2)", "4,1,1", ("-1", "4,1,3"), "4,3,3"),
        single("4,4,4", "-d3/u4"),
    ),
    dual=(
        single("1,1,1", "((e2*u2 - 1)*(u1 - u3)^2 - e3*u1*u3*(u1 - u3) - e4*u1^2*u4)/(u1^2*(u1 - u3)^2)"),
        single("1,1,2", "-e2/u1"),
        C("(e3*(u1 - u3) + e4*u4)/(u1 - u3)^2", "1,1,3", "2,2,3"),
        C("e4/(u1 - u3)", "1,1,4", "2,2,4"),
        single("1,2,2", "e2/u2"),
        single("1,3,3", "-u1*(e3*u3*(u1 - u3) - e4*u4*(u1 - 2*u3))/(u3^2*(u1 - u3)^2)"),
        single("1,3,4", "-e4*u1/(u3*(u1 - u3))"),
        single("2,1,1", "-u2*((e1 - 1)*(u1 - u3)^3 - e3*u3*((u1 - u3)^2 + u1*(u1 - u3)) - 2*e4*u1^2*u4)"
                        "/(u1^2*(u1 - u3)^3)"),
        single("2,1,2", "((e1 - 1)*(u1 - u3)^2 - e3*u3*(u1 - u3) - e4*u1*u4)/(u1*(u1 - u3)^2)"),
        C("-u2*(e3*(u1 - u3) + 2*e4*u4)/(u1 - u3)^3", "2,1,3", ("-1", "2,3,3")),
        C("-e4*u2/(u1 - u3)^2", "2,1,4", ("-1", "2,3,4")),
        single("2,2,2", "-e1/u2"),
        single("3,1,1", "u3*(e1*u1*(u1 - u3) - e2*u2*(2*u1 - u3))/(u1^2*(u1 - u3)^2)"),
        single("3,1,2", "e2*u3/(u1*(u1 - u3))"),
        single("3,1,3", "-(e1*(u1 - u3) - e2*u2)/(u1 - u3)^2"),
        C("-e2/(u1 - u3)", "3,2,3", "4,2,4"),
        single("3,3,3", "(e1*u1*u3*(u1 - u3) - e2*u2*u3^2 + (e4*u4 - u3)*(u1 - u3)^2)/(u3^2*(u1 - u3)^2)"),
        single("3,3,4", "-e4/u3"),
        single("3,4,4", "e4/u4"),
        C("-e4*(e1*(u1 - u3) - 2*e2*u2)/(u1 - u3)^3", "4,1,1", ("-1", "4,1,3")),
        C("e2*u4/(u1 - u3)^2", "4,1,2", ("-1", "4,2,3")),
        single("4,1,4", "-(e1*(u1 - u3) - e2*u2)/(u1 - u3)^2"),
        single("4,3,3", "-u4*(e1*u1*((u1 - u3)^2 - u3*(u1 - u3)) + e2*u2*u3^2 + (e3 - 1)*(u1 - u3)^3)"
                        "/(u3^2*(u1 - u3)^3)"),
        single("4,4,4", "-e3/u4"),
    ),
    metric=MetricFixture(
        instances=({1: 1, 3: 1}, {1: 2, 3: -1}),
        params=("C1", "C2"),
        functions=(("F1", 2), ("F2", 4)),
        entries={
            "1,1": "(u3 - u1)^(-2*e3)*(F1 + C1*u2^(1 - e1)/(u3 - u1))",
            "1,2": "C1/(2*e3)*u2^(-e1)*(u3 - u1)^(-2*e3)",
            "3,3": "(u3 - u1)^(-2*e1)*(F2 + C2*u4^(1 - e3)/(u3 - u1))",
            "3,4": "-C2/(2*e1)*u4^(-e3)*(u3 - u1)^(-2*e1)",
        },
    ),
)

CASE_211 = Case(
    id="211",
    blocks=(2, 1, 1),
    a0="F1*u2 + F2 + F3 + F4",
    gamma=(
        C("-(d3/(u1 - u3) + d4/(u1 - u4))", "1,1,1", "2,1,2"),
        C("d3/(u1 - u3)", "1,1,3", ("-1", "1,3,3"), "2,2,3", ("-(u1 - u3)/u2", "2,1,3"),
          ("(u1 - u3)/u2", "2,3,3"), ("(u3 - u4)/(u1 - u3)", "4,3,3"), ("-(u3 - u4)/(u1 - u3)", "4,3,4")),
        C("d4/(u1 - u4)", "1,1,4", ("-1", "1,4,4"), "2,2,4", ("-(u1 - u4)/u2", "2,1,4"),
          ("(u1 - u4)/u2", "2,4,4"), ("(u3 - u4)/(u1 - u4)", "3,3,4"), ("-(u3 - u4)/(u1 - u4)", "3,4,4")),
        C("d2/u2", "1,2,2", ("(u1 - u3)/u2", "3,1,2"), ("-(u1 - u3)/u2", "3,2,3"),
          ("(u1 - u4)/u2", "4,1,2"), ("-(u1 - u4)/u2", "4,2,4")),
        single("2,1,1", "u2*(d3/(u1 - u3)^2 + d4/(u1 - u4)^2)"),
        single("2,2,2", "-d1/u2"),
        C("(d1 - u2/(u1 - u3)*d2)/(u1 - u3)", "3,1,1", ("-1", "3,1,3")),
        single("3,3,3", "(1/(u1 - u3) - 1/(u3 - u4))*d1 - u2/(u1 - u3)^2*d2"),
        C("(d1 - u2/(u1 - u4)*d2)/(u1 - u4)", "4,1,1", ("-1", "4,1,4")),
        single("4,4,4", "(d1 - u2/(u1 - u4)*d2)/(u1 - u4) + d3/(u3 - u4)"),
    ),
    dual=(
        single("1,1,1", "(e2*u2*(u1 - u3)*(u1 - u4) - e3*u1*u3*(u1 - u4) - e4*u1*u4*(u1 - u3)"
                        " - u1*(u1 - u3)*(u1 - u4))/(u1^2*(u1 - u4)*(u1 - u3))"),
        single("1,1,2", "-e2/u1"),
        C("e3/(u1 - u3)", "1,1,3", "2,2,3"),
        C("e4/(u1 - u4)", "1,1,4", "2,2,4"),
        single("1,2,2", "e2/u2"),
        single("1,3,3", "-e3*u1/(u3*(u1 - u3))"),
        single("1,4,4", "e4*u1/(u4*(u1 - u4))"),
        single("2,1,1", "-u2*((e1 - 1)*(u1 - u3)^2*(u1 - u4)^2 - e3*u3*(2*u1*(u1 - u4)^2 - u3*(u1 - u4))"
                        " + e4*u4*(2*u1*(u1 - u3)^2 - u4*(u1 - u3)))/(u1^2*(u1 - u3)^2*(u1 - u4)^2)"),
        single("2,1,2", "(e1*u1^2 - e1*u1*(u3 + u4) + e1*u3*u4 - e3*u3*(u1 - u4) - e4*u4*(u1 - u3)"
                        " - u1^2 + u1*(u3 + u4) - u3*u4)/(u1*(u1 - u3)*(u1 - u4))"),
        single("2,2,2", "-e1/u2"),
        single("2,3,3", "e3*u2/(u1 - u3)^2"),
        single("3,1,1", "u3*(e1*u1*(u1 - u3) - e2*u2*(2*u1 - u3))/(u1^2*(u1 - u3)^2)"),
        single("3,1,2", "e2*u3/(u1*(u1 - u3))"),
        single("3,1,3", "-(e1*(u1 - u3) - e2*u2)/(u1 - u3)^2"),
        single("3,2,3", "-e2/(u1 - u3)"),
        single("3,3,3", "(e1*u1*(u1 - u3)*(u3 - u4) - e2*u2*u3*(u3 - u4) - e4*u4*(u1 - u3)^2"
                        " - (u1 - u3)^2*(u3 - u4))/(u3*(u1 - u3)^2*(u1 - u4))"),
        single("3,3,4", "e4/(u3 - u4)"),
        single("3,4,4", "-u3*e4/(u4*(u3 - u4))"),
        single("4,1,1", "-u4*(e1*u1*(u1 - u4) - e2*u2*(2*u1 - u4))/(u1^2*(u1 - u4)^2)"),
        single("4,1,2", "e2*u4/(u1*(u1 - u4))"),
        single("4,1,4", "-(e1*(u1 - u4) - e2*u2)/(u1 - u4)^2"),
        single("4,2,4", "-e2/(u1 - u4)"),
        single("4,3,3", "e3*u4/(u3*(u3 - u4))"),
        single("4,3,4", "-e3/(u3 - u4)"),
        single("4,4,4", "(e1*u1*(u3 - u4)*(u1 - u4) - e2*u2*u4*(u3 - u4) + e3*u3*(u1 - u4)^2"
                        " - (u1^2 + u4^2)*(u3 - u4) + 2*u1*u4*(u2 - u4))/(u4*(u1 - u4)^2*(u3 - u4))"),
    ),
    metric=MetricFixture(
        instances=({1: 1, 3: 1, 4: 1}, {1: 2, 3: "1/2", 4: -1}),
        params=("C1", "C2", "C3"),
        functions=(("F1", 2),),
        entries={
            "1,1": ("(u1 - u3)^(-2*e3)*(u4 - u1)^(-2*e4)*(F1 - C1*e3/e4*u2^(1 - e1)/(u1 - u3)"
                    " + C1*u2^(1 - e1)/(u4 - u1))"),
            "1,2": "C1/(2*e4)*u2^(-e1)*(u1 - u3)^(-2*e3)*(u4 - u1)^(-2*e4)",
            "3,3": "C2*(u3 - u4)^(-2*e4)*(u1 - u3)^(-2*e1)",
            "4,4": "C3*(u3 - u4)^(-2*e3)*(u1 - u4)^(-2*e1)",
        },
    ),
)

CASES = {c.id: c for c in (CASE_2, CASE_3, CASE_21, CASE_4, CASE_31, CASE_22, CASE_211)}


@dataclass(frozen=True)
class Erratum:
    table: str          # "gamma" or "dual"
    key: str            # "i,j,k"
    corrected: str
    note: str


def _errata(table, *rows):
    return tuple(Erratum(table, key, corrected, note) for key, corrected, note in rows)


SIGN = "opposite sign"
OMITTED = "nonzero symbol missing from the list"

ERRATA = {
    "2": (),
    "3": (),
    "21": _errata(
        "gamma",
        ("1,3,3", "-d3/(u1 - u3)", "flat unit forces G^1_33 = -G^1_13"),
        ("2,1,1", "u2*d3/(u1 - u3)^2", SIGN),
        ("2,1,2", "-d3/(u1 - u3)", SIGN),
        ("2,1,3", "-u2*d3/(u1 - u3)^2", SIGN),
        ("2,2,3", "d3/(u1 - u3)", SIGN),
        ("2,3,3", "u2*d3/(u1 - u3)^2", SIGN),
    ) + _errata(
        "dual",
        ("2,1,1", "-((e1 - 1)*(u1 - u3)^2 - e3*u3*(2*u1 - u3))*u2/(u1^2*(u1 - u3)^2)",
         "denominator factor (u1 - u3)^2 missing"),
        ("2,2,3", "e3/(u1 - u3)", SIGN),
        ("3,1,2", "e2*u3/(u1*(u1 - u3))", SIGN),
        ("1,3,3", "-e3*u1/(u3*(u1 - u3))", OMITTED),
        ("2,1,3", "-e3*u2/(u1 - u3)^2", OMITTED),
    ),
    "4": _errata(
        "gamma",
        ("3,2,3", "(-d1 + u3/u2*d2 + 2*u3/u2^2*(u4 - u3^2/u2)*d4)/u2", "factor 2 missing in the d4 term"),
    ) + _errata(
        "dual",
        ("1,1,1", "(e2*u1^2*u2 + e3*u1*(u1*u3 - u2^2) + e4*(u1^2*u4 - 2*u1*u2*u3 + u2^3) - u1^3)/u1^4",
         "wrong e4 coefficient"),
        ("3,2,3", "-(e1*u2^3 - e2*u2^2*u3 - 2*e4*u3*(u2*u4 - u3^2))/u2^4",
         "not equal to G~^2_22: the e3*u2*u3^2 term should be e2*u2^2*u3"),
        ("3,1,2", "(1 - e1)*u2/u1^2", "second, conflicting value printed for this symbol"),
    ),
    "31": _errata(
        "dual",
        ("2,1,2", "(e1*(u1 - u4) - e4*u4 - (u1 - u4))/(u1*(u1 - u4))", "u1^2 should be u1"),
        ("3,1,1", "-(e1*(u1 - u4)^3*(u1*u3 - u2^2)"
                  " - e4*u4*(u1*u3*(u1 - u4)*(2*u1 - u4) - u2^2*(3*u1^2 - 3*u1*u4 + u4^2))"
                  " - (u1 - u4)^3*(u1*u3 - u2^2))/(u1^3*(u1 - u4)^3)", "wrong e4 coefficient"),
        ("4,1,1", "u4*(e1*u1^2*(u1 - u4)^2 - e2*u1*u2*(u1 - u4)*(2*u1 - u4)"
                  " - e3*(u1*u3*(u1 - u4)*(2*u1 - u4) - u2^2*(3*u1^2 - 3*u1*u4 + u4^2)))/(u1^3*(u1 - u4)^3)",
         "prefactor e4 should be u4, and wrong e3 coefficient"),
        ("3,1,3", "(e1*(u1 - u4) - e4*u4 - (u1 - u4))/(u1*(u1 - u4))", OMITTED),
        ("3,1,4", "-e4*(u1*u3 - u2^2 - u3*u4)/(u1 - u4)^3", OMITTED),
        ("3,2,4", "-e4*u2/(u1 - u4)^2", OMITTED),
    ),
    "22": _errata(
        "gamma",
        ("3,4,4", "d4/u4", "chain coefficient u4/(u1 - u4) should be u4/(u1 - u3)"),
    ) + _errata(
        "dual",
        ("1,1,1", "((e2*u2 - u1)*(u1 - u3)^2 - e3*u1*u3*(u1 - u3) - e4*u1^2*u4)/(u1^2*(u1 - u3)^2)",
         "constant term -1 should be -u1"),
        ("4,1,1", "u4*(e1*(u1 - u3) - 2*e2*u2)/(u1 - u3)^3", "prefactor -e4 should be u4"),
        ("4,1,3", "-u4*(e1*(u1 - u3) - 2*e2*u2)/(u1 - u3)^3", "prefactor -e4 should be u4"),
        ("4,3,3", "-u4*(e1*u1*((u1 - u3)^2 - u3*(u1 - u3)) + 2*e2*u2*u3^2 + (e3 - 1)*(u1 - u3)^3)"
                  "/(u3^2*(u1 - u3)^3)", "factor 2 missing in the e2 term"),
        ("4,3,4", "(e1*u1*(u1 - u3) - e2*u2*u3 + (e3 - 1)*(u1 - u3)^2)/(u3*(u1 - u3)^2)", OMITTED),
    ),
    "211": _errata(
        "gamma",
        ("3,3,3", "d1/(u1 - u3) - u2/(u1 - u3)^2*d2 - d4/(u3 - u4)",
         "the d1/(u3 - u4) term should be d4/(u3 - u4)"),
    ) + _errata(
        "dual",
        ("1,4,4", "-e4*u1/(u4*(u1 - u4))", SIGN),
        ("2,1,1", "-u2*((e1 - 1)*(u1 - u3)^2*(u1 - u4)^2 - e3*u3*(2*u1 - u3)*(u1 - u4)^2"
                  " - e4*u4*(2*u1 - u4)*(u1 - u3)^2)/(u1^2*(u1 - u3)^2*(u1 - u4)^2)",
         "wrong e3 and e4 coefficients"),
        ("3,3,3", "(e1*u1*(u1 - u3)*(u3 - u4) - e2*u2*u3*(u3 - u4) - e4*u4*(u1 - u3)^2"
                  " - (u1 - u3)^2*(u3 - u4))/(u3*(u1 - u3)^2*(u3 - u4))",
         "denominator factor (u1 - u4) should be (u3 - u4)"),
        ("4,1,1", "u4*(e1*u1*(u1 - u4) - e2*u2*(2*u1 - u4))/(u1^2*(u1 - u4)^2)", SIGN),
        ("4,4,4", "(e1*u1*(u3 - u4)*(u1 - u4) - e2*u2*u4*(u3 - u4) + e3*u3*(u1 - u4)^2"
                  " - (u1^2 + u4^2)*(u3 - u4) + 2*u1*u4*(u3 - u4))/(u4*(u1 - u4)^2*(u3 - u4))",
         "u2 should be u3 in the last term"),
        ("2,1,3", "-e3*u2/(u1 - u3)^2", OMITTED),
        ("2,1,4", "-e4*u2/(u1 - u4)^2", OMITTED),
        ("2,4,4", "e4*u2/(u1 - u4)^2", OMITTED),
    ),
}
