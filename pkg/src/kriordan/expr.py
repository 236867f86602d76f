"""Generating-function expressions such as ``1/(1-z)`` or ``z/(1-z^2)``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | base ('^' INT)?
    base   := INT | 'z' | '(' expr ')'

A rational ``p/q`` is simply a quotient of two integers.  Unary minus binds
looser than ``^``, so ``-z^2`` means ``-(z^2)``.  Whitespace is ignored and the
Unicode minus sign is accepted as ``-``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EvaluationError, NotAUnitError
from .series import Series, mul, power, reciprocal


class ParseError(ValueError):
    """Syntax error at a 1-based character position."""

    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")
        self.position = position
        self.expected = expected


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]

_SYMBOLS = set("+-*/^()")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """``(kind, text, position)`` triples ending with an ``EOF`` token."""
    text = text.replace("−", "-")
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i + 1))
            i = j
        elif ch == "z":
            tokens.append(("z", ch, i + 1))
            i += 1
        elif ch in _SYMBOLS:
            tokens.append((ch, ch, i + 1))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i + 1,
                             frozenset({"INT", "z", "(", "-"}))
    tokens.append(("EOF", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, *kinds: str):
        kind, text, pos = self.tokens[self.i]
        if kind not in kinds:
            what = "end of input" if kind == "EOF" else repr(text)
            raise ParseError(f"unexpected {what}", pos, frozenset(kinds))
        self.i += 1
        return text

    def expr(self) -> Expr:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take("+", "-")
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take("*", "/")
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.peek() == "-":
            self.take("-")
            return Neg(self.factor())
        node = self.base()
        if self.peek() == "^":
            self.take("^")
            node = Pow(node, int(self.take("INT")))
        return node

    def base(self) -> Expr:
        kind = self.peek()
        if kind == "INT":
            return Num(Fraction(int(self.take("INT"))))
        if kind == "z":
            self.take("z")
            return Var()
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        self.take("INT", "z", "(", "-")
        raise AssertionError("unreachable")


def parse_expression(text: str) -> Expr:
    p = _Parser(text)
    node = p.expr()
    if p.peek() != "EOF":
        p.take("EOF", "+", "-", "*", "/", "^")
    return node


def evaluate(node: Expr, trunc: int) -> Series:
    """Expand *node* as a series truncated at *trunc*."""
    if isinstance(node, Num):
        return Series.constant(node.value, trunc)
    if isinstance(node, Var):
        return Series.z(trunc)
    if isinstance(node, Neg):
        return -evaluate(node.operand, trunc)
    if isinstance(node, Pow):
        return power(evaluate(node.base, trunc), node.exponent)
    left = evaluate(node.left, trunc)
    right = evaluate(node.right, trunc)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return mul(left, right)
    try:
        return mul(left, reciprocal(right))
    except NotAUnitError:
        raise EvaluationError("division needs a denominator with nonzero constant term") from None


def parse_series(text: str, trunc: int) -> Series:
    return evaluate(parse_expression(text), trunc)
