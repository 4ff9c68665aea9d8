"""Text syntax for algebra elements.

Grammar: integer and fraction scalars, vertex/edge identifiers, postfix
``*`` for ghost edges, juxtaposition or ``.`` for concatenation, ``+``/``-``
for sums, parentheses.  A ``*`` directly after a number is scalar
multiplication; after an identifier or a closing parenthesis it is the
involution.  Example: ``2*c.c.f.f*.c* - 1/3*v``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgebraError, Element, LeavittAlgebra

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_'^]*)"
                    r"|(?P<op>[+\-*/.()]))")


class ParseError(AlgebraError):
    pass


def tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r} at offset {pos}")
            break
        if m.group("num"):
            out.append(("num", m.group("num")))
        elif m.group("ident"):
            out.append(("ident", m.group("ident")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, algebra: LeavittAlgebra, tokens: list[tuple[str, str]]):
        self.algebra = algebra
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def parse(self) -> Element:
        el = self.expr()
        if self.peek() != (None, None):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return el

    def expr(self) -> Element:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = self.term().scale(sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                nxt = self.term()
                total = total + (nxt if val == "+" else -nxt)
            else:
                return total

    def term(self) -> Element:
        scalar = Fraction(1)
        product: Element | None = None
        expect_factor = True
        while True:
            kind, val = self.peek()
            if expect_factor:
                if kind == "num":
                    scalar *= self.number()
                    # a '*' after a number is scalar multiplication
                    k2, v2 = self.peek()
                    if k2 == "op" and v2 == "*":
                        self.take()
                        expect_factor = True
                        continue
                elif kind == "ident" or (kind == "op" and val == "("):
                    factor = self.starred_primary()
                    product = factor if product is None else product * factor
                else:
                    raise ParseError(f"expected a factor, found {val!r}")
                expect_factor = False
                continue
            if kind == "op" and val == ".":
                self.take()
                expect_factor = True
                continue
            if kind == "ident" or kind == "num" or (kind == "op" and val == "("):
                expect_factor = True
                continue
            break
        if product is None:
            product = self.algebra.one()
        return product.scale(scalar)

    def number(self) -> Fraction:
        kind, val = self.take()
        assert kind == "num"
        k2, v2 = self.peek()
        if k2 == "op" and v2 == "/":
            self.take()
            k3, v3 = self.take()
            if k3 != "num":
                raise ParseError("expected a denominator after '/'")
            return Fraction(int(val), int(v3))
        return Fraction(int(val))

    def starred_primary(self) -> Element:
        kind, val = self.take()
        if kind == "ident":
            el = self.algebra.symbol(val)
        elif kind == "op" and val == "(":
            el = self.expr()
            self.expect_op(")")
        else:
            raise ParseError(f"unexpected token {val!r}")
        while self.peek() == ("op", "*"):
            self.take()
            el = el.star()
        return el


def parse_element(algebra: LeavittAlgebra, text: str) -> Element:
    """Parse ``text`` into a canonical Element over ``algebra``."""
    return _Parser(algebra, tokenize(text)).parse()


def format_element(el: Element) -> str:
    """Canonical text form; ``parse_element`` round-trips it exactly."""
    if el.is_zero():
        return "0"
    field = el.algebra.field
    pieces = []
    for mono, coeff in el.sorted_terms():
        parts = list(mono.alpha.edges) + [e + "*" for e in reversed(mono.beta.edges)]
        mstr = ".".join(parts) if parts else mono.alpha.vertex
        neg = isinstance(coeff, Fraction) and coeff < 0
        mag = -coeff if neg else coeff
        body = mstr if mag == field.one else f"{mag}*{mstr}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)
