"""Exact evaluation of polynomial/rational expressions in named parameters.

Expressions use Python arithmetic syntax (``+ - * / **``, parentheses)
plus ``^`` for powers. Parameter names may be Python keywords such as
``lambda``; Greek letters are folded to their ASCII names.
"""

from __future__ import annotations

import ast
import keyword
import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import UnboundParameter

GREEK = {"λ": "lambda", "μ": "mu", "α": "alpha", "β": "beta", "ν": "nu"}

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_KEYWORD_SUFFIX = "__kw"


def normalize_name(name: str) -> str:
    return GREEK.get(name, name)


def _fold_greek(text: str) -> str:
    for g, ascii_name in GREEK.items():
        text = text.replace(g, f" {ascii_name} ")
    return text


def _protect(match: re.Match) -> str:
    word = match.group(0)
    return word + _KEYWORD_SUFFIX if keyword.iskeyword(word) else word


@lru_cache(maxsize=4096)
def compile_expression(text: str) -> ast.Expression:
    source = _IDENT.sub(_protect, _fold_greek(text).replace("^", "**"))
    try:
        tree = ast.parse(source.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}: {exc.msg}") from None
    _validate(tree.body, text)
    return tree


def _validate(node: ast.AST, text: str) -> None:
    if isinstance(node, ast.BinOp):
        if not isinstance(node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)):
            raise ValueError(f"unsupported operator in {text!r}")
        _validate(node.left, text)
        _validate(node.right, text)
    elif isinstance(node, ast.UnaryOp):
        if not isinstance(node.op, (ast.UAdd, ast.USub)):
            raise ValueError(f"unsupported operator in {text!r}")
        _validate(node.operand, text)
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, int) or isinstance(node.value, bool):
            raise ValueError(f"only integer literals are allowed in {text!r}")
    elif not isinstance(node, ast.Name):
        raise ValueError(f"unsupported syntax in {text!r}")


def _eval(node: ast.AST, env: Mapping[str, Fraction]) -> Fraction:
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        name = node.id.removesuffix(_KEYWORD_SUFFIX)
        if name not in env:
            raise UnboundParameter(name)
        return Fraction(env[name])
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    left = _eval(node.left, env)
    right = _eval(node.right, env)
    op = node.op
    if isinstance(op, ast.Add):
        return left + right
    if isinstance(op, ast.Sub):
        return left - right
    if isinstance(op, ast.Mult):
        return left * right
    if isinstance(op, ast.Div):
        return left / right
    if right.denominator != 1:
        raise ValueError("exponents must be integers")
    return left ** int(right)


def evaluate(text: str | int | Fraction, env: Mapping[str, Fraction] | None = None) -> Fraction:
    """Evaluate ``text`` exactly with parameters taken from ``env``."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return _eval(compile_expression(text).body, env or {})


def free_names(text: str) -> set[str]:
    tree = compile_expression(text)
    return {
        n.id.removesuffix(_KEYWORD_SUFFIX) for n in ast.walk(tree) if isinstance(n, ast.Name)
    }
