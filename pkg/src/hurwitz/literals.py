"""Parser for ring-value literals such as ``"-3"``, ``"1/2"`` or ``"3*x^2*y - x + 1"``.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | NAME ['^' ['-'] INT]

Multiplication is always explicit. ``NAME`` must be an indeterminate of the
target ring; a fraction needs an invertible denominator in the target ring.
"""

from __future__ import annotations

import re

from .errors import ParseError, RingMismatch
from .rings import Ring, RingValue

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            if m.group(3) not in "+-*/^":
                raise ParseError(f"unexpected character {m.group(3)!r}", column=m.start(3) + 1)
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", column=tok[2] + 1)
        self.i += 1
        return tok

    def expr(self) -> RingValue:
        if not self.tokens:
            raise ParseError("empty literal", column=1)
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.i += 1
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.i += 1
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                break
        if self.peek()[0] != "end":
            tok = self.peek()
            raise ParseError(f"unexpected {tok[1]!r}", column=tok[2] + 1)
        return acc

    def term(self) -> RingValue:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.i += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> RingValue:
        tok = self.peek()
        if tok[0] == "int":
            self.i += 1
            value = self.ring.from_integer(int(tok[1]))
            if self.peek()[:2] == ("op", "/"):
                self.i += 1
                den_tok = self.take("int")
                den = self.ring.from_integer(int(den_tok[1]))
                if int(den_tok[1]) == 0 or not den.is_unit():
                    raise RingMismatch(
                        f"{tok[1]}/{den_tok[1]}", self.ring, "denominator not invertible"
                    )
                value = value * den.inverse()
            return value
        if tok[0] == "name":
            self.i += 1
            if tok[1] not in self.ring.variables():
                raise RingMismatch(f"indeterminate {tok[1]!r}", self.ring)
            g = self.ring.gen(tok[1])
            if self.peek()[:2] == ("op", "^"):
                self.i += 1
                neg = False
                if self.peek()[:2] == ("op", "-"):
                    self.i += 1
                    neg = True
                exp = int(self.take("int")[1])
                if neg:
                    exp = -exp
                try:
                    return g**exp
                except Exception as exc:
                    raise RingMismatch(f"{tok[1]}^{exp}", self.ring, str(exc)) from None
            return g
        raise ParseError(f"expected a number or indeterminate, got {tok[1] or 'end'!r}", column=tok[2] + 1)


def parse_literal(text: str, ring: Ring) -> RingValue:
    """Parse ``text`` as an element of ``ring``."""
    return _Parser(str(text), ring).expr()
