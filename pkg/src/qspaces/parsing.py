"""Parser for algebra expressions.

Grammar (whitespace is insignificant except after a generator, see below)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := factor (['*'] factor)*          # juxtaposition multiplies
    factor  := atom ['^' ['-'] INT]
    atom    := NUMBER ['/' NUMBER] | 'i' | 'q' | GENERATOR | '(' expr ')'

Generators are ``a a* g g*`` (context ``su``) or ``y z z*`` (context
``disk``).  A ``*`` written directly after a generator letter, with no space,
is the adjoint suffix; otherwise ``*`` is multiplication.  So ``a*g`` means
``alpha* gamma`` while ``a * g`` means ``alpha gamma``.  Negative powers are
allowed only for invertible scalars such as ``q^-2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .disk import DiskElement
from .scalars import GaussianRational, QScalar
from .suq2 import SUq2Element

__all__ = ["ParseError", "parse_expression", "CONTEXTS"]

CONTEXTS = {
    "su": (SUq2Element, {"a": "a", "a*": "A", "g": "g", "g*": "G"}),
    "disk": (DiskElement, {"y": "y", "z": "z", "z*": "Z"}),
}


class ParseError(ValueError):
    """Syntax error at a byte offset of the UTF-8 encoded input."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.message = message
        super().__init__(f"{message} at byte {offset}")


@dataclass
class _Tok:
    kind: str
    value: object
    pos: int


_NUMBER = re.compile(r"\d+(?:/\d+)?")


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str, context: str) -> list[_Tok]:
    gens = CONTEXTS[context][1]
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _NUMBER.match(text, pos)
        if m:
            num, _, den = m.group().partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", _byte_offset(text, pos))
            toks.append(_Tok("num", Fraction(int(num), int(den) if den else 1), pos))
            pos = m.end()
            continue
        if ch in "+-^()":
            toks.append(_Tok(ch, ch, pos))
            pos += 1
            continue
        if ch == "*":
            toks.append(_Tok("*", ch, pos))
            pos += 1
            continue
        if ch.isalpha():
            if ch in ("i", "q"):
                toks.append(_Tok(ch, ch, pos))
                pos += 1
                continue
            name = ch
            if pos + 1 < n and text[pos + 1] == "*":
                name = ch + "*"
            if name not in gens:
                raise ParseError(
                    f"unknown generator {name!r} for context {context!r}", _byte_offset(text, pos)
                )
            toks.append(_Tok("gen", gens[name], pos))
            pos += len(name)
            continue
        raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, pos))
    toks.append(_Tok("end", None, n))
    return toks


class _Parser:
    def __init__(self, text: str, context: str):
        if context not in CONTEXTS:
            raise ValueError(f"unknown context {context!r}; use one of {sorted(CONTEXTS)}")
        self.text = text
        self.cls = CONTEXTS[context][0]
        self.toks = _tokenize(text, context)
        self.i = 0

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, _byte_offset(self.text, tok.pos), self.text)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().value!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek().kind in "+-":
            sign = -1 if self.take().kind == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    _STARTS = ("num", "i", "q", "gen", "(")

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek().kind
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind in self._STARTS:
                value = value * self.factor()
            else:
                return value

    def factor(self):
        base_tok = self.peek()
        value = self.atom()
        if self.peek().kind != "^":
            return value
        self.take()
        neg = False
        if self.peek().kind == "-":
            self.take()
            neg = True
        tok = self.take()
        if tok.kind != "num" or tok.value.denominator != 1:
            self.error("exponent must be an integer", tok)
        e = int(tok.value)
        if not neg:
            return value**e
        inv = self._scalar_inverse(value)
        if inv is None:
            self.error("negative powers are only defined for invertible scalars", base_tok)
        return inv**e

    def _scalar_inverse(self, value):
        terms = value.terms
        if len(terms) != 1:
            return None
        ((mono, c),) = terms.items()
        if mono != self.cls.unit_monomial:
            return None
        inv = c.inverse()
        return None if inv is None else self.cls.scalar(inv)

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return self.cls.scalar(tok.value)
        if tok.kind == "i":
            return self.cls.scalar(GaussianRational(0, 1))
        if tok.kind == "q":
            return self.cls.scalar(QScalar.q())
        if tok.kind == "gen":
            return self.cls.gen(tok.value)
        if tok.kind == "(":
            value = self.expr()
            close = self.take()
            if close.kind != ")":
                self.error("expected ')'", close)
            return value
        if tok.kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {tok.value!r}", tok)


def parse_expression(text: str, context: str = "su"):
    """Parse and normalize an expression into an ``SUq2Element`` or ``DiskElement``."""
    return _Parser(text, context).parse()


def parse_scalar(text: str) -> QScalar:
    """Parse a scalar-only expression (no generators)."""
    value = _Parser(text, "su").parse()
    terms = value.terms
    if not terms:
        return QScalar()
    if set(terms) != {SUq2Element.unit_monomial}:
        raise ParseError("expected a scalar expression", 0, text)
    return terms[SUq2Element.unit_monomial]
