"""
Recursive-descent parser for field elements and skew polynomials.

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('+'|'-') unary | factor
    factor := atom ('^' ['-'] integer)*
    atom   := integer | 'z' | 'Y' | '(' expr ')'

Whitespace is ignored.  In ore mode every value is an OrePoly and products
are taken in K[Y; d] in the order written, so ``z*Y`` is the left-coefficient
form and comes out as Y*z + 1.
"""

import re
from fractions import Fraction

from .errors import DiffRecError, ParseError, ZeroDenominator
from .field import QQ, QZ, RatFunc
from .ore import OrePoly, ore_mul

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def tokenize(text):
    """List of (kind, value, pos); kind is 'int', 'name', 'op' or 'end'."""
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, field, ore):
        self.text = text
        self.field = field
        self.ore = ore
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers -------------------------------------------------

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], self.text)

    def at_op(self, chars):
        kind, val, _ = self.peek()
        return kind == "op" and val in chars

    # -- values ----------------------------------------------------------

    def const(self, x):
        x = self.field(x)
        return OrePoly([x], self.field) if self.ore else x

    def divide(self, a, b, tok):
        if self.ore:
            if b.degree > 0:
                raise self.error("can only divide by a field element", tok)
            if b.is_zero():
                raise ZeroDenominator(f"division by zero at position {tok[2]}")
            return a.right_scale(1 / b.lc)
        if b == 0:
            raise ZeroDenominator(f"division by zero at position {tok[2]}")
        return a / b

    def power(self, a, n, tok):
        if not self.ore:
            if n < 0 and a == 0:
                raise ZeroDenominator(f"zero raised to a negative power at position {tok[2]}")
            return a ** n
        if n >= 0:
            return a ** n
        if a.degree > 0:
            raise self.error("negative power of a non-constant skew polynomial", tok)
        if a.is_zero():
            raise ZeroDenominator(f"zero raised to a negative power at position {tok[2]}")
        return OrePoly([a.lc ** n], self.field)

    # -- grammar ---------------------------------------------------------

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.at_op("+-"):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.at_op("*/"):
            tok = self.take()
            w = self.unary()
            if tok[1] == "*":
                v = ore_mul(v, w) if self.ore else v * w
            else:
                v = self.divide(v, w, tok)
        return v

    def unary(self):
        if self.at_op("+-"):
            op = self.take()[1]
            v = self.unary()
            return -v if op == "-" else v
        return self.factor()

    def factor(self):
        v = self.atom()
        while self.at_op("^"):
            tok = self.take()
            sign = 1
            if self.at_op("-"):
                self.take()
                sign = -1
            kind, n, _ = self.peek()
            if kind != "int":
                raise self.error("expected an integer exponent")
            self.take()
            v = self.power(v, sign * n, tok)
        return v

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return self.const(Fraction(val))
        if kind == "name":
            if val == "z":
                if self.field is QQ:
                    raise self.error("'z' is not available over q", tok)
                return self.const(RatFunc.z())
            if val == "Y":
                if not self.ore:
                    raise self.error("'Y' is not allowed in a field element", tok)
                return OrePoly.Y(self.field)
            raise self.error(f"unknown name {val!r}", tok)
        if kind == "op" and val == "(":
            v = self.expr()
            if not self.at_op(")"):
                raise self.error("expected ')'")
            self.take()
            return v
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def _run(text, field, ore):
    try:
        return _Parser(text, field, ore).parse()
    except DiffRecError:
        raise
    except ZeroDivisionError as e:
        raise ZeroDenominator(str(e)) from e


def parse_field_expr(text, field=QZ):
    """A field element from text; over q the result is a Fraction."""
    return _run(text, field, ore=False)


def parse_ore_expr(text, field=QZ):
    """An OrePoly from text such as ``Y^2 - Y*(1/(z-1)) + 1/(z-1)^2``."""
    return _run(text, field, ore=True)


def parse_inits(text, field=QZ):
    """Comma-separated field elements."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_field_expr(part, field) for part in text.split(","))
