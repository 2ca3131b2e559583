"""Compile arithmetic expression strings into objective functions.

The grammar covers ``+ - * / ^``, parentheses, numeric literals, variables
``x1 .. xn``, and the functions ``sin cos exp sqrt abs``.  ``^`` is
right-associative power binding tighter than unary minus, so ``-x1^2`` means
``-(x1^2)`` and ``2^-3`` is legal.  Compiled expressions evaluate on single
points or on ``(m, n)`` batches (``supports_batch``); domain violations such
as ``sqrt`` of a negative number yield non-finite values rather than raising,
which the engine treats as never-selected candidates.
"""

from __future__ import annotations

import re
from typing import Callable, Optional

import numpy as np

from .core import Array

__all__ = ["ExpressionError", "CompiledExpression", "parse_expression"]

_FUNCTIONS: dict[str, Callable] = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "abs": np.abs,
}

_VARIABLE_RE = re.compile(r"^x(\d+)$")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()]))"
)


class ExpressionError(ValueError):
    """Malformed expression; ``position`` is the 1-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind: str, value, pos: int):
        self.kind = kind  # "num" | "name" | "op" | "end"
        self.value = value
        self.pos = pos  # 1-based column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        match = _TOKEN_RE.match(text, i)
        if match is None:
            # Only whitespace may remain unmatched at the very end.
            rest = text[i:].lstrip()
            if not rest:
                break
            col = i + (len(text[i:]) - len(rest)) + 1
            raise ExpressionError(f"unexpected character {rest[0]!r}", col)
        kind = match.lastgroup
        value = match.group(kind)
        pos = match.start(kind) + 1
        if kind == "num":
            value = float(value)
        tokens.append(_Token(kind, value, pos))
        i = match.end()
    tokens.append(_Token("end", None, len(text) + 1))
    return tokens


class _Parser:
    """Recursive descent over the token stream, emitting evaluator closures.

    Each grammar rule returns a function of an ``(..., n)`` float array.
    """

    def __init__(self, text: str, dim: int):
        self.text = text
        self.dim = dim
        self.tokens = _tokenize(text)
        self.i = 0

    def parse(self) -> Callable[[Array], Array]:
        if self.tokens[0].kind == "end":
            raise ExpressionError("empty expression", 1)
        node = self._sum()
        tok = self._peek()
        if tok.kind != "end":
            raise ExpressionError(
                f"unexpected {tok.value!r} (missing operator?)", tok.pos
            )
        return node

    def _peek(self) -> _Token:
        return self.tokens[self.i]

    def _advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _accept_op(self, chars: str) -> Optional[str]:
        tok = self._peek()
        if tok.kind == "op" and tok.value in chars:
            self._advance()
            return tok.value
        return None

    def _sum(self):
        node = self._product()
        while (op := self._accept_op("+-")) is not None:
            rhs = self._product()
            if op == "+":
                node = (lambda l, r: lambda x: l(x) + r(x))(node, rhs)
            else:
                node = (lambda l, r: lambda x: l(x) - r(x))(node, rhs)
        return node

    def _product(self):
        node = self._unary()
        while (op := self._accept_op("*/")) is not None:
            rhs = self._unary()
            if op == "*":
                node = (lambda l, r: lambda x: l(x) * r(x))(node, rhs)
            else:
                node = (lambda l, r: lambda x: l(x) / r(x))(node, rhs)
        return node

    def _unary(self):
        if self._accept_op("+") is not None:
            return self._unary()
        if self._accept_op("-") is not None:
            child = self._unary()
            return lambda x: -child(x)
        return self._power()

    def _power(self):
        base = self._atom()
        if self._accept_op("^") is not None:
            exponent = self._unary()
            return lambda x: np.power(base(x), exponent(x))
        return base

    def _atom(self):
        tok = self._advance()
        if tok.kind == "num":
            value = tok.value
            return lambda x: value
        if tok.kind == "name":
            if self._peek().kind == "op" and self._peek().value == "(":
                fn = _FUNCTIONS.get(tok.value)
                if fn is None:
                    known = ", ".join(sorted(_FUNCTIONS))
                    raise ExpressionError(
                        f"unknown function {tok.value!r} (known: {known})", tok.pos
                    )
                self._advance()  # "("
                arg = self._sum()
                self._expect_close(tok)
                return (lambda f, a: lambda x: f(a(x)))(fn, arg)
            return self._variable(tok)
        if tok.kind == "op" and tok.value == "(":
            node = self._sum()
            self._expect_close(tok)
            return node
        what = "end of expression" if tok.kind == "end" else repr(tok.value)
        raise ExpressionError(f"expected a value, found {what}", tok.pos)

    def _variable(self, tok: _Token):
        match = _VARIABLE_RE.match(tok.value)
        if match is None:
            raise ExpressionError(
                f"unknown variable {tok.value!r} (use x1..x{self.dim})", tok.pos
            )
        k = int(match.group(1))
        if not 1 <= k <= self.dim:
            raise ExpressionError(
                f"variable x{k} out of range for dimension {self.dim}", tok.pos
            )
        index = k - 1
        return lambda x: x[..., index]

    def _expect_close(self, opener: _Token):
        if self._accept_op(")") is None:
            tok = self._peek()
            raise ExpressionError(
                f"missing ')' for group opened at position {opener.pos}", tok.pos
            )


class CompiledExpression:
    """Pure objective evaluating a parsed expression on points or batches."""

    supports_batch = True

    def __init__(self, text: str, dim: int, fn: Callable[[Array], Array]):
        self.text = text
        self.dim = dim
        self._fn = fn

    def __call__(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.dim:
            raise ValueError(
                f"expression over {self.dim} variables got a point of "
                f"length {x.shape[-1]}"
            )
        with np.errstate(all="ignore"):
            value = self._fn(x)
        if x.ndim == 1:
            return float(value)
        value = np.asarray(value, dtype=float)
        if value.shape != x.shape[:-1]:
            # Constant (sub)expressions collapse to scalars; spread them out.
            value = np.broadcast_to(value, x.shape[:-1]).copy()
        return value

    def __repr__(self):
        return f"{type(self).__name__}({self.text!r}, dim={self.dim})"


def parse_expression(text: str, dim: int) -> CompiledExpression:
    """Compile ``text`` into an objective over variables ``x1..x{dim}``.

    Raises :class:`ExpressionError` (with the offending 1-based position) on
    syntax errors, unknown names, or variable indices beyond ``dim``.
    """
    dim = int(dim)
    if dim < 1:
        raise ValueError("dim must be a positive integer")
    fn = _Parser(text, dim).parse()
    return CompiledExpression(text, dim, fn)
