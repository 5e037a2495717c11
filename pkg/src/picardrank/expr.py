"""Integer polynomials in ``x`` written as text.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' INT)?
    base   := 'x' | INT | '(' expr ')'

Exponents must be literal nonnegative integers.  The Unicode minus sign
is accepted as '-'.
"""

from __future__ import annotations

from . import polynomials as P
from .errors import ParseError

_UNICODE_MINUS = "−"


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(_UNICODE_MINUS, "-")
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {got}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        if self.pos < len(self.text) and self.text[self.pos] in ".eE":
            raise ParseError("non-integer literal", start)
        return int(self.text[start : self.pos])

    def expr(self) -> list[int]:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        acc = P.scale(self.term(), sign)
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            t = self.term()
            acc = P.add(acc, t) if op == "+" else P.sub(acc, t)
        return acc

    def term(self) -> list[int]:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = P.mul(acc, self.factor())
        return acc

    def factor(self) -> list[int]:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            if not self.peek().isdigit():
                raise ParseError("exponent must be a nonnegative integer literal", self.pos)
            return P.power(base, self.integer())
        return base

    def base(self) -> list[int]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        if ch == "x":
            self.pos += 1
            if self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                raise ParseError("unknown identifier", self.pos - 1)
            return [0, 1]
        if ch.isdigit():
            return P.trim([self.integer()])
        if ch.isalpha() or ch == "_":
            raise ParseError(f"unknown identifier {ch!r}", self.pos)
        if ch == ".":
            raise ParseError("non-integer literal", self.pos)
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input", self.pos)


def parse_polynomial(text: str) -> list[int]:
    """Expand ``text`` into ascending integer coefficients (``[]`` for zero)."""
    parser = _Parser(text)
    result = parser.expr()
    if parser.peek():
        raise ParseError(f"unexpected {parser.peek()!r}", parser.pos)
    return result


def render(coeffs, var: str = "x") -> str:
    """Canonical text for an ascending coefficient list, highest degree first."""
    coeffs = P.trim(coeffs)
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)
