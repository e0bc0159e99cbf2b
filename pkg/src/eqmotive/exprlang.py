"""A tiny arithmetic language for catalog data.

Expressions are ordinary infix arithmetic (``^`` is accepted as a synonym for
``**``) over integer literals, named values from an environment and calls to
whitelisted functions.  They are parsed with :mod:`ast` and walked directly,
so nothing is ever passed to ``eval``.

>>> from eqmotive.algebra import Q
>>> evaluate("(q-1)^2*q", {"q": Q})
Poly('q^3 - 2*q^2 + q')
>>> evaluate("n*(n-1)/2", {"n": 5})
Fraction(10, 1)
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
    ast.Mod: operator.mod,
}

_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}


class ExprError(ValueError):
    pass


@lru_cache(maxsize=4096)
def _parse(src: str) -> ast.Expression:
    try:
        return ast.parse(src.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse expression {src!r}: {exc.msg}") from None


def evaluate(src: str, env: Mapping[str, Any]) -> Any:
    """Evaluate ``src`` with names resolved in ``env``.

    Integer literals become :class:`~fractions.Fraction` so that ``/`` is
    exact; exponents are kept as plain ``int``.
    """
    return _walk(_parse(src).body, env, src)


def _walk(node: ast.AST, env: Mapping[str, Any], src: str) -> Any:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExprError(f"only integer literals are allowed in {src!r}")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise ExprError(f"unknown name {node.id!r} in {src!r}")
        return env[node.id]
    if isinstance(node, ast.UnaryOp):
        val = _walk(node.operand, env, src)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        if isinstance(node.op, ast.Not):
            return not val
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _walk(node.left, env, src)
        right = _walk(node.right, env, src)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(right, Fraction) and right.denominator == 1):
                raise ExprError(f"exponents must be integers in {src!r}")
            right = int(right)
        return _BINOPS[type(node.op)](left, right)
    if isinstance(node, ast.Compare):
        left = _walk(node.left, env, src)
        for op, comp in zip(node.ops, node.comparators):
            right = _walk(comp, env, src)
            if type(op) not in _CMPOPS or not _CMPOPS[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        vals = (_walk(v, env, src) for v in node.values)
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        fn = env.get(node.func.id)
        if not callable(fn):
            raise ExprError(f"unknown function {node.func.id!r} in {src!r}")
        return fn(*(_walk(a, env, src) for a in node.args))
    raise ExprError(f"unsupported syntax in {src!r}")
