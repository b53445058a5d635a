"""Text form of states.

Grammar::

    state  := term (('+' | '-') term)*
    term   := ['+' | '-'] product
    product:= factor (('*' | '/') factor)*      # at most one ket, last, not divided
    factor := number | 'i' | 'pi' | func '(' expr ')' | '(' expr ')' | ket
    ket    := '|' int (',' int)* '>'
    func   := sqrt | exp | cos | sin

Inside parentheses and function arguments ``expr`` is a plain complex
arithmetic expression (no kets).  Numbers accept integers, decimals and
exponents, e.g. ``1/sqrt(2)*|2,0> - 1/sqrt(2)*|0,2>`` or
``(0.5+0.5*i)*|1,1>``.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass

from .errors import ParseError
from .fock import PureState

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<ket>\|[^>]*>)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/()^])
""", re.VERBOSE)

_FUNCS = {"sqrt": cmath.sqrt, "exp": cmath.exp, "cos": cmath.cos, "sin": cmath.sin}
_CONSTS = {"i": 1j, "pi": math.pi}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _locate(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", *_locate(text, pos))
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def error(self, message, token=None):
        token = token or self.peek()
        return ParseError(message, *_locate(self.text, token.pos))

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, text) -> bool:
        if self.peek().kind == "op" and self.peek().text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            raise self.error(f"expected {text!r}")

    # state level: terms may carry a ket
    def state(self):
        terms = [self.term(sign=1)]
        while self.peek().kind == "op" and self.peek().text in "+-":
            sign = 1 if self.take().text == "+" else -1
            terms.append(self.term(sign))
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return terms

    def term(self, sign):
        start = self.peek()
        while self.peek().kind == "op" and self.peek().text in "+-":
            if self.take().text == "-":
                sign = -sign
        coef = complex(sign)
        ket = None
        first = True
        while True:
            if not first:
                if self.accept("*"):
                    op = "*"
                elif self.accept("/"):
                    op = "/"
                else:
                    break
            else:
                op = "*"
            first = False
            tok = self.peek()
            if ket is not None:
                raise self.error("a ket must be the last factor of a term", tok)
            if tok.kind == "ket":
                if op == "/":
                    raise self.error("cannot divide by a ket", tok)
                ket = self.ket(self.take())
            else:
                value = self.power()
                if op == "/":
                    if value == 0:
                        raise self.error("division by zero", tok)
                    coef /= value
                else:
                    coef *= value
        return coef, ket, start

    def ket(self, tok: Token):
        body = tok.text[1:-1]
        parts = body.split(",")
        try:
            counts = tuple(int(p.strip()) for p in parts)
        except ValueError:
            raise self.error(f"malformed ket {tok.text!r}", tok) from None
        if any(c < 0 for c in counts):
            raise self.error(f"negative photon count in {tok.text!r}", tok)
        return counts

    # plain complex arithmetic
    def expr(self):
        value = self.signed_product()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.signed_product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def signed_product(self):
        sign = 1
        while self.peek().kind == "op" and self.peek().text in "+-":
            if self.take().text == "-":
                sign = -sign
        value = self.power()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.take().text
            tok = self.peek()
            rhs = self.power()
            if op == "/" and rhs == 0:
                raise self.error("division by zero", tok)
            value = value * rhs if op == "*" else value / rhs
        return sign * value

    def power(self):
        base = self.atom()
        if self.accept("^"):
            tok = self.peek()
            sign = -1 if self.accept("-") else 1
            exponent = self.atom() * sign
            try:
                return base ** exponent
            except ZeroDivisionError:
                raise self.error("zero to a negative power", tok) from None
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return complex(float(tok.text))
        if tok.kind == "name":
            if tok.text in _CONSTS:
                return complex(_CONSTS[tok.text])
            if tok.text in _FUNCS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return complex(_FUNCS[tok.text](arg))
            raise self.error(f"unknown name {tok.text!r}", tok)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "op" and tok.text == "-":
            return -self.atom()
        if tok.kind == "ket":
            raise self.error("kets are not allowed inside a coefficient", tok)
        if tok.kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_state(text: str, normalize: bool = False) -> PureState:
    """Parse a state expression.

    Args:
        text: expression such as ``"1/sqrt(2)*|2,0> - 1/sqrt(2)*|0,2>"``.
        normalize: rescale to unit norm after parsing.

    Raises:
        ParseError: syntax errors, kets of different length or photon
            number, scalar terms without a ket, or an expression that sums to
            the zero vector.  Line and column are attached.
    """
    parser = _Parser(text)
    if parser.peek().kind == "end":
        raise parser.error("empty expression")
    terms = parser.state()
    amps: dict = {}
    shape = None
    for coef, ket, tok in terms:
        if ket is None:
            raise parser.error("term has no ket", tok)
        if not (math.isfinite(coef.real) and math.isfinite(coef.imag)):
            raise parser.error("coefficient is not finite", tok)
        here = (len(ket), sum(ket))
        if shape is None:
            shape = here
        elif here != shape:
            raise parser.error(f"ket {ket} has (modes, photons) = {here}, expected {shape}", tok)
        amps[ket] = amps.get(ket, 0) + coef
    state = PureState(amps, d=shape[0], n=shape[1])
    if state.is_zero():
        raise ParseError("expression is the zero state", 1, 1)
    return state.normalized() if normalize else state


def format_coefficient(value: complex, digits: int = 12) -> str:
    re_, im = value.real, value.imag
    if im == 0:
        return f"{re_:.{digits}g}"
    if re_ == 0:
        return f"{im:.{digits}g}*i"
    return f"({re_:.{digits}g}{im:+.{digits}g}*i)"


def format_ket(key) -> str:
    return "|" + ",".join(str(c) for c in key) + ">"


def format_state(s: PureState, digits: int = 12) -> str:
    """Canonical text: ``coef*|n1,...,nd>`` terms in basis order joined by ``' + '``."""
    if s.is_zero():
        return "0*" + format_ket((0,) * (s.d - 1) + (s.n,))
    return " + ".join(f"{format_coefficient(v, digits)}*{format_ket(k)}" for k, v in s)
