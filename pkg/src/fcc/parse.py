"""A small exact expression parser.

Accepts integers, names, parentheses, ``+ - * /`` and powers written ``**``
or ``^``.  Exponents must evaluate to integer constants.  Names resolve first
through ``env`` and then through the variables of the ring.
"""

from __future__ import annotations

import ast
from typing import Mapping

from .poly import PolyRing
from .ratexpr import RationalExpr, lift


class ParseError(ValueError):
    pass


def parse_expr(text: str, ring: PolyRing, env: Mapping | None = None) -> RationalExpr:
    if not isinstance(text, str):
        raise ParseError(f"expected an expression string, got {type(text).__name__}")
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    env = env or {}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ParseError(f"only integer literals are allowed, got {node.value!r}")
            return lift(node.value, ring)
        if isinstance(node, ast.Name):
            if node.id in env:
                return lift(env[node.id], ring)
            try:
                return lift(ring.var(node.id), ring)
            except (KeyError, ValueError):
                raise ParseError(f"unknown name {node.id!r}") from None
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left = ev(node.left)
            if isinstance(node.op, ast.Pow):
                return left ** _integer_exponent(ev(node.right), text)
            right = ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right.is_zero():
                    raise ParseError(f"division by zero in {text!r}")
                return left / right
        raise ParseError(f"unsupported syntax in {text!r}: {ast.dump(node)[:40]}")

    return ev(tree)


def _integer_exponent(e: RationalExpr, text: str) -> int:
    if not e.is_polynomial() or not e.num.is_constant():
        raise ParseError(f"exponent must be a constant in {text!r}")
    c = e.num.constant_term()
    if c.denominator != 1:
        raise ParseError(f"exponent {c} is not an integer in {text!r}")
    return int(c)
