"""Plain-text format for multiplication tables.

::

    # comment
    dim 4
    param lambda = 1/2
    e1*e1 = e2
    e1*e3 = (2-lambda) e4 + 3 e2

A term is an optional coefficient followed by a basis name ``e<k>``. The
coefficient is a rational literal, a parenthesised polynomial in the
declared parameters, or a bare parameter name; a ``*`` between coefficient
and basis element is optional. Products that are not mentioned are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import Algebra
from .errors import DslSyntaxError, IndexOutOfRange, UnboundParameter
from .expr import evaluate, normalize_name
from .linalg import Matrix

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<basis>[eE](?P<bidx>\d+))(?![A-Za-z_0-9])
  | (?P<form>D(?P<fidx>\d+))(?![A-Za-z_0-9])
  | (?P<number>\d+(?:/\d+)?)
  | (?P<name>[^\W\d]\w*)
  | (?P<lparen>\()
  | (?P<op>[-+*=,)])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int  # 1-based
    value: object = None


def _tokenize(line: str, lineno: int) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(line):
        if line[pos] == "#":
            break
        m = _TOKEN.match(line, pos)
        if m is None:
            raise DslSyntaxError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
        kind = m.lastgroup
        col = pos + 1
        if kind == "bidx":
            kind = "basis"
        if kind == "fidx":
            kind = "form"
        if kind == "lparen":
            # Capture a balanced parenthesised expression as one token.
            depth, end = 0, pos
            while end < len(line):
                ch = line[end]
                depth += ch == "("
                depth -= ch == ")"
                end += 1
                if depth == 0:
                    break
            if depth:
                raise DslSyntaxError("unbalanced parenthesis", lineno, col)
            tokens.append(Token("expr", line[pos + 1 : end - 1], col))
            pos = end
            continue
        if kind == "basis":
            tokens.append(Token("basis", m.group(0), col, int(m.group("bidx"))))
        elif kind == "form":
            tokens.append(Token("form", m.group(0), col, m.group("fidx")))
        elif kind != "ws":
            tokens.append(Token(kind, m.group(0), col))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens: list[Token], lineno: int, line: str):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = len(line.split("#", 1)[0].rstrip()) + 1

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise DslSyntaxError("unexpected end of line", self.lineno, self.end_col)
        self.i += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.take()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            raise DslSyntaxError(f"expected {want!r}, found {tok.text!r}", self.lineno, tok.column)
        return tok

    def error(self, message: str, tok: Token | None = None) -> DslSyntaxError:
        col = tok.column if tok is not None else self.end_col
        return DslSyntaxError(message, self.lineno, col)


def _coefficient(cur: _Cursor, env: Mapping[str, Fraction]) -> Fraction | None:
    tok = cur.peek()
    if tok is None:
        return None
    if tok.kind == "number":
        cur.take()
        return Fraction(tok.text)
    if tok.kind == "expr":
        cur.take()
        try:
            return evaluate(tok.text, env)
        except UnboundParameter:
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise DslSyntaxError(str(exc), cur.lineno, tok.column) from None
    if tok.kind == "name":
        cur.take()
        name = normalize_name(tok.text)
        if name not in env:
            raise UnboundParameter(name)
        return Fraction(env[name])
    return None


def _linear_terms(cur: _Cursor, env: Mapping[str, Fraction], kind: str) -> list[tuple[Fraction, Token]]:
    """Parse ``[sign] [coef] [*] target {(+|-) [coef] [*] target}`` until end of line."""
    terms = []
    first = True
    while True:
        tok = cur.peek()
        if tok is None:
            if first:
                raise cur.error("expected a term")
            return terms
        sign = Fraction(1)
        if tok.kind == "op" and tok.text in "+-":
            cur.take()
            sign = Fraction(-1) if tok.text == "-" else sign
        elif not first:
            raise cur.error(f"expected '+' or '-', found {tok.text!r}", tok)
        first = False
        coef = _coefficient(cur, env)
        nxt = cur.peek()
        if nxt is not None and nxt.kind == "op" and nxt.text == "*":
            if coef is None:
                raise cur.error("'*' without a coefficient", nxt)
            cur.take()
            nxt = cur.peek()
        if nxt is None or nxt.kind != kind:
            if coef is not None and coef == 0 and nxt is None and kind == "basis":
                terms.append((Fraction(0), None))
                return terms
            found = "end of line" if nxt is None else repr(nxt.text)
            raise cur.error(f"expected a {'basis element' if kind == 'basis' else 'form'}, found {found}", nxt)
        cur.take()
        terms.append((sign * (Fraction(1) if coef is None else coef), nxt))


def _check_index(k: int, dim: int, tok: Token, lineno: int) -> int:
    if not 1 <= k <= dim:
        raise IndexOutOfRange(f"basis index {k} outside 1..{dim}", lineno, tok.column)
    return k - 1


def parse_algebra(text: str, bindings: Mapping[str, object] | None = None, name: str | None = None) -> Algebra:
    """Parse a table. ``bindings`` override parameters declared in the text."""
    overrides = {normalize_name(k): Fraction(v) for k, v in (bindings or {}).items()}
    env: dict[str, Fraction] = dict(overrides)
    dim: int | None = None
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, line)
        head = tokens[0]
        if head.kind == "name" and head.text == "dim":
            cur.take()
            if dim is not None:
                raise cur.error("duplicate dim declaration", head)
            dim = int(cur.expect("number").text)
            if cur.peek() is not None:
                raise cur.error("trailing input after dim", cur.peek())
            continue
        if head.kind == "name" and head.text == "param":
            cur.take()
            pname = normalize_name(cur.expect("name").text)
            cur.expect("op", "=")
            sign = Fraction(1)
            if cur.peek() is not None and cur.peek().text == "-":
                cur.take()
                sign = Fraction(-1)
            value = sign * Fraction(cur.expect("number").text)
            if cur.peek() is not None:
                raise cur.error("trailing input after parameter value", cur.peek())
            if pname not in overrides:
                env[pname] = value
            continue
        if dim is None:
            raise cur.error("'dim' must be declared before products", head)
        left = cur.expect("basis")
        cur.expect("op", "*")
        right = cur.expect("basis")
        eq = cur.expect("op", "=")
        i = _check_index(left.value, dim, left, lineno)
        j = _check_index(right.value, dim, right, lineno)
        if cur.peek() is None:
            raise cur.error("missing right-hand side", eq)
        row = products.setdefault((i, j), {})
        for coef, tok in _linear_terms(cur, env, "basis"):
            if tok is None:
                continue
            k = _check_index(tok.value, dim, tok, lineno)
            row[k] = row.get(k, Fraction(0)) + coef
    if dim is None:
        raise DslSyntaxError("missing 'dim' declaration", 1, 1)
    return Algebra.from_products(dim, products, name=name)


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_terms(pairs: list[tuple[Fraction, str]]) -> str:
    parts = []
    for c, label in pairs:
        mag = abs(c)
        body = label if mag == 1 else f"{_format_rational(mag)} {label}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


def format_algebra(a: Algebra, comment: str | None = None) -> str:
    """Serialize to the text format; ``parse_algebra`` inverts it exactly."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"dim {a.dim}")
    for i in range(a.dim):
        for j in range(a.dim):
            v = a.structure[i][j]
            if any(v):
                rhs = _format_terms([(c, f"e{k + 1}") for k, c in enumerate(v) if c])
                lines.append(f"e{i + 1}*e{j + 1} = {rhs}")
    return "\n".join(lines) + "\n"


def _form_indices(tok: Token, dim: int, lineno: int) -> tuple[int, int]:
    digits = tok.value
    if len(digits) != 2:
        raise DslSyntaxError(f"form {tok.text!r} must name two single-digit indices", lineno, tok.column)
    i, j = int(digits[0]), int(digits[1])
    for k in (i, j):
        if not 1 <= k <= dim:
            raise IndexOutOfRange(f"form index {k} outside 1..{dim}", lineno, tok.column)
    return i - 1, j - 1


def parse_form(text: str, dim: int, bindings: Mapping[str, object] | None = None) -> Matrix:
    """Parse a bilinear form written in the basis D<ij>, e.g. ``D22 + D31 + 2 D41``.

    ``D<ij>`` is the form taking the value 1 on (e_i, e_j) and 0 on other basis pairs.
    """
    env = {normalize_name(k): Fraction(v) for k, v in (bindings or {}).items()}
    grid = [[Fraction(0)] * dim for _ in range(dim)]
    tokens = _tokenize(text, 1)
    cur = _Cursor(tokens, 1, text)
    if not tokens:
        raise cur.error("empty form")
    if len(tokens) == 1 and tokens[0].kind == "number" and Fraction(tokens[0].text) == 0:
        return Matrix.zeros(dim, dim)
    for coef, tok in _linear_terms(cur, env, "form"):
        i, j = _form_indices(tok, dim, 1)
        grid[i][j] += coef
    return Matrix.from_rows(grid, dim)


def format_form(m: Matrix) -> str:
    pairs = [(m[i, j], f"D{i + 1}{j + 1}") for i in range(m.rows) for j in range(m.cols) if m[i, j]]
    return _format_terms(pairs)
