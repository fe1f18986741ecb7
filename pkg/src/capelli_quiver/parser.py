"""Text syntax for operator expressions.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := RATIONAL | "f" | "D" | "t" | "(" expr ")"
    RATIONAL := INTEGER ("/" INTEGER)?

``D`` is Δ and ``t`` is θ; the Unicode spellings ``Δ``, ``θ`` and ``−`` are
accepted as well. Exponents are nonnegative integer literals.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgebraSpec, OperatorElement

__all__ = ["ParseError", "parse_expression"]

_ALIASES = {"Δ": "D", "θ": "t", "−": "-"}
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>[fDt])|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    """Malformed expression. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, code: str = "syntax"):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.code = code


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    text = "".join(_ALIASES.get(ch, ch) for ch in text)
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, spec: AlgebraSpec, text: str):
        self.spec = spec
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def parse(self) -> OperatorElement:
        value = self.expr()
        kind, text, pos = self.peek
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return value

    def expr(self) -> OperatorElement:
        value = self.term()
        while self.peek[1] in ("+", "-") and self.peek[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> OperatorElement:
        value = self.unary()
        while self.peek[0] == "op" and self.peek[1] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> OperatorElement:
        kind, text, _ = self.peek
        if kind == "op" and text in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if text == "-" else inner
        return self.power()

    def power(self) -> OperatorElement:
        base = self.atom()
        if self.peek[0] == "op" and self.peek[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind == "op" and text == "-":
                raise ParseError("negative exponent", pos, code="exponent-negative")
            if kind != "num" or "/" in text:
                found = "end of input" if kind == "end" else repr(text)
                raise ParseError(f"expected a nonnegative integer exponent, found {found}", pos)
            return base ** int(text)
        return base

    def atom(self) -> OperatorElement:
        kind, text, pos = self.take()
        if kind == "num":
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", pos)
            return self.spec.scalar(Fraction(int(num), int(den or 1)))
        if kind == "sym":
            return {"f": self.spec.f, "D": self.spec.delta, "t": self.spec.theta}[text]
        if kind == "op" and text == "(":
            value = self.expr()
            self.expect(")")
            return value
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", pos)


def parse_expression(spec: AlgebraSpec, text: str) -> OperatorElement:
    """Parse ``text`` and return its normal form in the algebra ``spec``.

    Raises:
        ParseError: with ``code`` ``"syntax"`` or ``"exponent-negative"``.
    """
    return _Parser(spec, text).parse()
