"""Text syntax for rings and elements.

Rings are written ``Z``, ``Z/12``, ``Q[x]`` or ``Q[x,y]``. Elements follow::

    expr   = [sign] term {sign term}
    sign   = "+" | "-"
    term   = factor {"*" factor}
    factor = number ["/" number] | name ["^" digits]

Whitespace between tokens is ignored. Printing always produces a string
that parses back to the same element.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, UsageError
from .rings import IntegerRing, ModularRing, MultiPolyRing, UniPolyRing

_RING = re.compile(r"\s*(?:(Z)(?:\s*/\s*(\d+))?|Q\s*\[\s*([^\]]*)\])\s*\Z")


def parse_ring(desc):
    """Ring from its text form or a descriptor object."""
    if isinstance(desc, dict):
        kind = desc.get("kind")
        if kind == "integers":
            return IntegerRing()
        if kind == "modular":
            return ModularRing(desc.get("modulus"))
        if kind == "polynomial":
            vs = desc.get("variables") or []
            return UniPolyRing(vs[0]) if len(vs) == 1 else MultiPolyRing(tuple(vs))
        raise UsageError(f"unknown ring kind {kind!r}")
    m = _RING.match(desc) if isinstance(desc, str) else None
    if not m:
        raise UsageError(f"cannot parse ring {desc!r}")
    if m.group(1):
        return ModularRing(int(m.group(2))) if m.group(2) else IntegerRing()
    names = tuple(v.strip() for v in m.group(3).split(","))
    return UniPolyRing(names[0]) if len(names) == 1 else MultiPolyRing(names)


def ring_text(ring):
    return str(ring)


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.pos = 0
        if isinstance(ring, UniPolyRing):
            self.names = {ring.var: ring.gen()}
        elif isinstance(ring, MultiPolyRing):
            self.names = {v: ring.gen(v) for v in ring.variables}
        else:
            self.names = {}

    def error(self, message, pos=None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self, what):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error(f"expected {what}")
        return int(self.text[start:self.pos])

    def factor(self):
        c = self.peek()
        if c.isdigit():
            num = self.digits("number")
            if self.peek() == "/":
                slash = self.pos
                self.pos += 1
                den = self.digits("denominator")
                if den == 0:
                    self.error("zero denominator", slash)
                if not isinstance(self.ring, (UniPolyRing, MultiPolyRing)):
                    self.error(f"fractions are not elements of {self.ring}", slash)
                return self.ring(Fraction(num, den))
            return self.ring(num)
        if c.isalpha() or c == "_":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.names:
                self.error(f"unknown variable {name!r} for {self.ring}", start)
            value = self.names[name]
            if self.peek() == "^":
                self.pos += 1
                value = value ** self.digits("exponent")
            return value
        self.error("expected number or variable" if c else "unexpected end of input")

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def expr(self):
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        value = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            value = value + self.term() * sign
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value


def parse_elem(text, ring):
    if not isinstance(text, str):
        raise UsageError(f"elements must be given as strings, got {text!r}")
    return _Parser(text, ring).expr()


def format_elem(a):
    return str(a)
