"""Recursive-descent parser for polynomial and rational expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | atom)*      # juxtaposition multiplies
    unary  := ('-' | '+') unary | power
    power  := atom ('^' ['-'] integer)?
    atom   := integer | decimal-free fraction via '/' | x | y | z | t | i | j
            | 'zeta' '(' integer ')' | '(' expr ')'
"""

import re
from fractions import Fraction

from .cyclotomic import DEFAULT_CONDUCTOR, CycNumber, cyc_embed
from .errors import ParseError
from .poly import MultiPoly, RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, N):
        self.text = text
        self.N = N
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2], self.text)

    def fail(self, message):
        raise ParseError(message, self.peek()[2], self.text)

    def parse(self):
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_atom(self):
        kind, value, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and value == "(")

    def term(self):
        val = self.unary()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.take()
                rhs = self.unary()
                if value == "*":
                    val = _mul(val, rhs)
                else:
                    val = _div(val, rhs, pos, self.text)
            elif self._starts_atom():
                val = _mul(val, self.power())
            else:
                return val

    def unary(self):
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            val = self.unary()
            return -val if value == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            neg = False
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer", tok[2], self.text)
            e = tok[1]
            if neg:
                if isinstance(base, Fraction):
                    if base == 0:
                        raise ParseError("zero to a negative power", tok[2], self.text)
                    return base ** (-e)
                base = _to_rational(base, self.N)
                if base.is_zero():
                    raise ParseError("zero to a negative power", tok[2], self.text)
                return base ** (-e)
            return base ** e
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return Fraction(value)
        if kind == "op" and value == "(":
            val = self.expr()
            self.expect(")")
            return val
        if kind == "name":
            if value in ("x", "y", "z", "t"):
                return MultiPoly.gen(value, self.N)
            if value == "i":
                if self.N % 4:
                    raise ParseError(f"i needs a conductor divisible by 4, got {self.N}", pos, self.text)
                return MultiPoly.const(CycNumber.i(self.N), self.N)
            if value == "j":
                if self.N % 3:
                    raise ParseError(f"j needs a conductor divisible by 3, got {self.N}", pos, self.text)
                return MultiPoly.const(CycNumber.j(self.N), self.N)
            if value == "zeta":
                self.expect("(")
                tok = self.take()
                if tok[0] != "int" or tok[1] < 1:
                    raise ParseError("zeta expects a positive integer order", tok[2], self.text)
                M = tok[1]
                self.expect(")")
                if self.N % M:
                    raise ParseError(f"zeta({M}) is not in Q(zeta_{self.N})", pos, self.text)
                z = cyc_embed(M, self.N, CycNumber.zeta(M)) if M != self.N else CycNumber.zeta(self.N)
                return MultiPoly.const(z, self.N)
            raise ParseError(f"unknown identifier {value!r}", pos, self.text)
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected {value!r}", pos, self.text)


def _mul(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    if isinstance(a, Fraction):
        return b * a
    return a * b


def _to_rational(v, N):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Fraction):
        v = MultiPoly.const(v, N)
    return RationalFunction(v)


def _div(a, b, pos, text):
    if isinstance(b, Fraction):
        if b == 0:
            raise ParseError("division by zero", pos, text)
        return a / b
    if isinstance(b, MultiPoly) and b.is_constant():
        c = b.constant_value()
        if c.is_zero():
            raise ParseError("division by zero", pos, text)
        if isinstance(a, Fraction):
            return MultiPoly.const(a, b.N) * c.inverse()
        return a * c.inverse() if isinstance(a, MultiPoly) else a / RationalFunction(b)
    if isinstance(b, (MultiPoly, RationalFunction)) and b.is_zero():
        raise ParseError("division by zero", pos, text)
    N = b.N
    return _to_rational(a, N) / _to_rational(b, N)


def _finish(val, N):
    if isinstance(val, Fraction):
        return MultiPoly.const(val, N)
    if isinstance(val, RationalFunction) and val.is_polynomial():
        return val.as_polynomial()
    return val


def parse_expression(text, N=DEFAULT_CONDUCTOR):
    """Parse into a MultiPoly, or a reduced RationalFunction when a denominator remains."""
    return _finish(_Parser(text, N).parse(), N)


def parse_polynomial(text, N=DEFAULT_CONDUCTOR):
    val = parse_expression(text, N)
    if not isinstance(val, MultiPoly):
        raise ParseError(f"{text!r} is not a polynomial", 0, text)
    return val


def parse_scalar(text, N=DEFAULT_CONDUCTOR):
    val = parse_polynomial(text, N)
    if not val.is_constant():
        raise ParseError(f"{text!r} is not a constant", 0, text)
    return val.constant_value()


def split_top_level(text, sep):
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_point(text, N=DEFAULT_CONDUCTOR):
    """A point given as ``(a, b)`` or ``(a : b : c)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    sep = ":" if ":" in body else ","
    return tuple(parse_scalar(p, N) for p in split_top_level(body, sep))
