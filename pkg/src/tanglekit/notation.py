"""Text notation for tangles, continued fractions and fractions.

Grammar (``*`` binds tighter than ``+``; both associate to the left)::

    top     := expr
    expr    := term ('+' term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | atom
    atom    := '[' INT ']' | '[' 'inf' ']' | '[' INT (',' INT)+ ']'
             | 'inv' '(' expr ')' | 'rot' '(' expr ')'
             | 'N' '(' expr ')' | 'D' '(' expr ')'      (outermost only)
             | '(' expr ')'
             | INT '/' INT | INT | 'inf'                 (fractions)
             | '1' '/' unary                             (same as inv)

A bare fraction inside a larger expression stands for the rational tangle
with that fraction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .contfrac import ContinuedFraction, expand_canonical
from .expr import Infinity, IntTangle, Invert, Mirror, Product, Rotate, Sum, TangleExpr
from .fraction import INFINITY, Fraction

__all__ = ["ParseError", "Closure", "Parsed", "parse", "to_text", "as_tangle"]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Closure:
    which: str  # "N" or "D"
    operand: "TangleExpr | ContinuedFraction"


Parsed = Union[TangleExpr, ContinuedFraction, Fraction, Closure]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>inv|rot|inf|N|D)|(?P<sym>[\[\](),+*/-])|(?P<inf>∞))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int  # character offset


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", _byte_offset(text, start))
        kind = m.lastgroup
        start = m.start(kind)
        tok_text = m.group(kind)
        if kind == "inf":
            kind, tok_text = "name", "inf"
        toks.append(_Tok(kind, tok_text, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _byte_offset(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(message, _byte_offset(self.text, tok.pos))

    def eat(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text or tok.kind == "end":
            self.error(f"expected {text!r}, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().text == text and self.peek().kind != "end":
            self.i += 1
            return True
        return False

    # grammar ---------------------------------------------------------------

    def top(self) -> Parsed:
        tok = self.peek()
        if tok.text in ("N", "D") and self.peek(1).text == "(":
            self.i += 2
            inner = self.expr()
            self.eat(")")
            node: Parsed = Closure(tok.text, _tangle(inner))
        else:
            node = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek().text == "+":
            self.i += 1
            node = Sum(_tangle(node), _tangle(self.term()))
        return node

    def term(self):
        node = self.unary()
        while self.peek().text == "*":
            self.i += 1
            node = Product(_tangle(node), _tangle(self.unary()))
        return node

    def unary(self):
        if self.accept("-"):
            inner = self.unary()
            if isinstance(inner, Fraction):
                return -inner
            return Mirror(_tangle(inner))
        return self.atom()

    def signed_int(self) -> int:
        neg = self.accept("-")
        tok = self.peek()
        if tok.kind != "int":
            self.error(f"expected an integer, found {tok.text or 'end of input'!r}")
        self.i += 1
        return -int(tok.text) if neg else int(tok.text)

    def atom(self):
        tok = self.peek()
        if tok.text == "[":
            self.i += 1
            if self.accept("inf"):
                self.eat("]")
                return Infinity()
            terms = [self.signed_int()]
            while self.accept(","):
                start = self.peek()
                a = self.signed_int()
                if a == 0:
                    self.error("inner continued fraction term is zero", start)
                terms.append(a)
            self.eat("]")
            if len(terms) == 1:
                return IntTangle(terms[0])
            return ContinuedFraction(terms)
        if tok.text in ("inv", "rot"):
            self.i += 1
            self.eat("(")
            inner = _tangle(self.expr())
            self.eat(")")
            return Invert(inner) if tok.text == "inv" else Rotate(inner)
        if tok.text in ("N", "D"):
            self.error("a closure is not a tangle; N(...) and D(...) must be outermost")
        if tok.text == "(":
            self.i += 1
            inner = self.expr()
            self.eat(")")
            return inner
        if tok.text == "inf":
            self.i += 1
            return INFINITY
        if tok.kind == "int":
            self.i += 1
            if self.accept("/"):
                nxt = self.peek()
                if nxt.kind == "int":
                    self.i += 1
                    if int(tok.text) == 0 and int(nxt.text) == 0:
                        self.error("0/0 is not a fraction", tok)
                    return Fraction(int(tok.text), int(nxt.text))
                if nxt.text == "inf":
                    self.error("write 0 instead of 1/inf", nxt)
                if tok.text != "1":
                    self.error("only 1/T is allowed for a tangle T", tok)
                return Invert(_tangle(self.unary()))
            return Fraction(int(tok.text))
        self.error(f"unexpected {tok.text or 'end of input'!r}")


def _tangle(node):
    """Fractions used as operands stand for their rational tangles."""
    if isinstance(node, Fraction):
        if node.is_infinite:
            return Infinity()
        return expand_canonical(node)
    return node


def parse(text: str) -> Parsed:
    """Parse tangle notation; raises :class:`ParseError` with a byte offset."""
    return _Parser(text).top()


def as_tangle(node: Parsed) -> TangleExpr | ContinuedFraction:
    if isinstance(node, Closure):
        raise ValueError("expected a tangle, got a closure")
    return _tangle(node)


_PREC = {Sum: 1, Product: 2}


def to_text(node: Parsed) -> str:
    """Canonical printing; ``parse(to_text(x))`` rebuilds ``x``."""
    return _show(node, 0)


def _show(node, ctx: int) -> str:
    if isinstance(node, Fraction):
        s = str(node) if not node.is_integer else str(node.p)
        return f"({s})" if ctx > 0 and node.p < 0 else s
    if isinstance(node, ContinuedFraction):
        return str(node)
    if isinstance(node, IntTangle):
        return f"[{node.n}]"
    if isinstance(node, Infinity):
        return "[inf]"
    if isinstance(node, Closure):
        return f"{node.which}({_show(node.operand, 0)})"
    if isinstance(node, Invert):
        return f"inv({_show(node.operand, 0)})"
    if isinstance(node, Rotate):
        return f"rot({_show(node.operand, 0)})"
    if isinstance(node, Mirror):
        return "-" + _show(node.operand, 3)
    if isinstance(node, Sum):
        s = f"{_show(node.left, 1)} + {_show(node.right, 2)}"
        return f"({s})" if ctx > 1 else s
    if isinstance(node, Product):
        s = f"{_show(node.top, 2)} * {_show(node.bottom, 3)}"
        return f"({s})" if ctx > 2 else s
    raise TypeError(f"cannot print {node!r}")
