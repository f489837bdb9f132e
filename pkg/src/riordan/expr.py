"""A small expression language for truncated series.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*`` and ``/``)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | base ("^" uint)?
    base   := "x" | uint ("/" uint)? | name | name "(" expr ")"
            | "sqrt" "(" expr ")" | "(" expr ")"

Names are ``C`` (Catalan), ``M`` (Motzkin) and ``W`` (central binomial).
``name(expr)`` substitutes ``expr`` into the named series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from riordan.errors import ExprSyntaxError, UnknownName
from riordan.series import Series, compose, sqrt
from riordan.special import catalan_series, central_binomial_series, motzkin_series

NAMED_SERIES = {"C": catalan_series, "M": motzkin_series, "W": central_binomial_series}
EVAL_SLACK = 6

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


# ---------------------------------------------------------------------- syntax tree


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Call:
    name: str
    arg: object


@dataclass(frozen=True)
class Sqrt:
    arg: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


# ---------------------------------------------------------------------- parser


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int


def _tokenize(text: str):
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        start = m.start(1) if num else m.start(2) if name else m.start(3)
        byte = len(text[:start].encode())
        if num:
            toks.append(_Tok("int", num, byte))
        elif name:
            toks.append(_Tok("name", name, byte))
        else:
            toks.append(_Tok("op", op, byte))
        pos = m.end()
    toks.append(_Tok("end", "", len(text.encode())))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        raise ExprSyntaxError(msg, tok.offset)

    def take(self, text=None, kind=None):
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            self.error(f"expected {want}, found {t.text!r}" if t.kind != "end" else f"expected {want}, found end of input")
        self.i += 1
        return t

    def at(self, text):
        return self.tok.kind == "op" and self.tok.text == text

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.at("*") or self.at("/"):
            op = self.take().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.at("-"):
            self.take()
            return Neg(self.factor())
        node = self.base()
        if self.at("^"):
            self.take()
            node = Pow(node, int(self.take(kind="int").text))
        return node

    def base(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            value = Fraction(int(t.text))
            if self.at("/") and self.toks[self.i + 1].kind == "int":
                self.take()
                den = self.take().text
                if int(den) == 0:
                    self.error("zero denominator", self.toks[self.i - 1])
                value /= int(den)
            return Num(value)
        if t.kind == "name":
            self.take()
            if t.text == "x":
                return Var()
            if t.text == "sqrt":
                self.take("(")
                arg = self.expr()
                self.take(")")
                return Sqrt(arg)
            if t.text not in NAMED_SERIES:
                raise UnknownName(f"unknown name {t.text!r} at offset {t.offset}")
            if self.at("("):
                self.take()
                arg = self.expr()
                self.take(")")
                return Call(t.text, arg)
            return Named(t.text)
        if self.at("("):
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if t.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {t.text!r}")

    def finish(self):
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")


def parse_expr(text: str):
    """Parse ``text`` into a syntax tree; raises ExprSyntaxError (with ``offset``) or UnknownName."""
    p = _Parser(text)
    node = p.expr()
    p.finish()
    return node


def parse_pair(text: str):
    """Parse ``"(g, f)"`` into two syntax trees."""
    p = _Parser(text)
    p.take("(")
    g = p.expr()
    p.take(",")
    f = p.expr()
    p.take(")")
    p.finish()
    return g, f


# ---------------------------------------------------------------------- evaluation


def _eval(node, order):
    if isinstance(node, Num):
        return Series.const(node.value, order)
    if isinstance(node, Var):
        return Series.x(order)
    if isinstance(node, Named):
        return NAMED_SERIES[node.name](order)
    if isinstance(node, Call):
        return compose(NAMED_SERIES[node.name](order), _eval(node.arg, order))
    if isinstance(node, Sqrt):
        return sqrt(_eval(node.arg, order))
    if isinstance(node, Neg):
        return -_eval(node.arg, order)
    if isinstance(node, Pow):
        return _eval(node.base, order) ** node.exponent
    if isinstance(node, BinOp):
        a, b = _eval(node.left, order), _eval(node.right, order)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node, order: int, slack: int = EVAL_SLACK) -> Series:
    """Evaluate at ``order + slack`` and truncate, so divisions by ``x`` keep the requested window."""
    return _eval(node, order + slack).truncate(order)


def eval_expr(text: str, order: int) -> Series:
    return evaluate(parse_expr(text), order)
