"""Infix expressions over sexagesimal literals.

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | primary
    primary := literal | ('sq' | 'sqrt') '(' expr ')' | '(' expr ')'

``×``/``÷``/``−`` are accepted for ``*``/``/``/``-``.  Literals use the core
notation, e.g. ``sqrt(2,36;15 - 1,40)`` evaluates to 7;30.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import DEFAULT_NOTATION, NotationConfig, divide, parse, square
from .errors import NotationError, NotationSyntaxError, NotExactlySolvable
from .roots import sqrt_exact

__all__ = ["evaluate", "tokenize"]

_ALIASES = {"×": "*", "÷": "/", "−": "-"}
_FUNCS = {"sq", "sqrt"}


def tokenize(text: str, cfg: NotationConfig = DEFAULT_NOTATION) -> list[tuple[str, str, int]]:
    """Split into (kind, text, offset) tuples; kinds are num, op, name, end."""
    literal = re.compile(r"[0-9][0-9" + re.escape(cfg.digit_separator + cfg.radix_mark) + r".]*")
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = literal.match(text, i)
        if m:
            tokens.append(("num", m.group(), i))
            i = m.end()
            continue
        ch = _ALIASES.get(ch, ch)
        if ch in "+-*/()":
            tokens.append(("op", ch, i))
            i += 1
            continue
        m = re.compile(r"[A-Za-z_]+").match(text, i)
        if m:
            tokens.append(("name", m.group(), i))
            i = m.end()
            continue
        raise NotationSyntaxError(f"unexpected character {text[i]!r}", i, text)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, cfg: NotationConfig):
        self.text = text
        self.cfg = cfg
        self.tokens = tokenize(text, cfg)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, text, offset = self.take()
        if text != value or kind != "op":
            found = text or "end of input"
            raise NotationSyntaxError(f"expected {value!r}, found {found!r}", offset, self.text)

    def expr(self) -> Fraction:
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Fraction:
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else divide(value, rhs)
        return value

    def unary(self) -> Fraction:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        return self.primary()

    def primary(self) -> Fraction:
        kind, text, offset = self.take()
        if kind == "num":
            try:
                return parse(text, self.cfg)
            except NotationError as exc:
                raise exc.shifted(offset) from None
        if kind == "name":
            if text not in _FUNCS:
                raise NotationSyntaxError(f"unknown function {text!r}", offset, self.text)
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            if text == "sq":
                return square(arg)
            root = sqrt_exact(arg)
            if root is None:
                raise NotExactlySolvable(f"sqrt({arg}) is not rational")
            return root
        if (kind, text) == ("op", "("):
            value = self.expr()
            self.expect(")")
            return value
        found = text or "end of input"
        raise NotationSyntaxError(f"unexpected {found!r}", offset, self.text)


def evaluate(text: str, cfg: NotationConfig = DEFAULT_NOTATION) -> Fraction:
    """Evaluate an expression exactly.

    Raises NotationError subclasses (with offsets) for bad input,
    DivisionByZero, NegativeInput for sqrt of a negative, and
    NotExactlySolvable when a sqrt has no rational value.
    """
    p = _Parser(text, cfg)
    value = p.expr()
    kind, tok, offset = p.peek()
    if kind != "end":
        raise NotationSyntaxError(f"unexpected {tok!r}", offset, text)
    return value
