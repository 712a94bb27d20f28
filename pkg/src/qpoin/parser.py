"""Expression grammar for algebra elements.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := '-' factor | atom ('^' exponent)?
    atom   := symbol | integer | '[' integer ']' | '(' expr ')'

Juxtaposition is a (noncommutative) product.  Division and fractional
exponents are allowed on scalars only; ``q^(k/2)`` is the only fractional
power.  ``W``, ``J3``, ``Jp``, ``Jm`` expand to E, F, K at evaluation time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, gen
from .scalars import BETA, LAM, ONE, P, Q, Scalar, qbracket, qpow
from .tables import GEN_NAMES, KINV

__all__ = ["ParseError", "parse", "evaluate", "parse_element", "Num", "Sym", "Bracket", "Neg", "Add", "Mul", "Div", "Pow"]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


# -- AST -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Bracket:
    n: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object
    sign: int  # +1 or -1


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exp: Fraction
    pos: int = 0


# -- lexer ----------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\[\s*\d+\s*\])|(.))")
_SCALAR_SYMBOLS = ("q", "qh", "s2", "lam")
_DERIVED = ("W", "J3", "Jp", "Jm")
SYMBOLS = frozenset(GEN_NAMES) | frozenset(_SCALAR_SYMBOLS) | frozenset(_DERIVED)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            out.append(("id", m.group(2), start))
        elif m.group(3):
            out.append(("bracket", m.group(3)[1:-1].strip(), start))
        else:
            ch = m.group(4)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


# -- parser ----------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value or kind != "op":
            raise ParseError(f"expected {value!r}, got {v or 'end of input'!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            _, v, _ = self.take()
            node = Add(node, self.term(), 1 if v == "+" else -1)
        return node

    def _starts_factor(self) -> bool:
        kind, v, _ = self.peek()
        return kind in ("num", "id", "bracket") or (kind == "op" and v == "(")

    def term(self):
        node = self.factor()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v == "*":
                self.take()
                node = Mul(node, self.factor())
            elif kind == "op" and v == "/":
                self.take()
                node = Div(node, self.factor(), pos)
            elif self._starts_factor():
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        kind, v, pos = self.peek()
        if kind == "op" and v == "-":
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.peek()[:2] == ("op", "^"):
            _, _, hat = self.take()
            node = Pow(node, self.exponent(), hat)
        return node

    def exponent(self) -> Fraction:
        kind, v, pos = self.peek()
        if kind == "op" and v == "(":
            self.take()
            sign = self._sign()
            num = self._int()
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self._int()
            self.expect(")")
            return Fraction(sign * num, den)
        sign = self._sign()
        return Fraction(sign * self._int())

    def _sign(self) -> int:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -1
        return 1

    def _int(self) -> int:
        kind, v, pos = self.take()
        if kind != "num":
            raise ParseError(f"expected an integer, got {v or 'end of input'!r}", pos)
        return int(v)

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Num(int(v))
        if kind == "bracket":
            return Bracket(int(v))
        if kind == "id":
            if v not in SYMBOLS:
                raise ParseError(f"unknown symbol {v!r}", pos)
            return Sym(v, pos)
        if kind == "op" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def parse(text: str):
    """Parse text into an AST; raises ParseError with the offending position."""
    return _Parser(text).parse()


# -- evaluation --------------------------------------------------------------------------


def _symbol(name: str) -> Element:
    from . import pl

    scalars = {"q": Q, "qh": P, "s2": BETA, "lam": LAM}
    if name in scalars:
        return Element.scalar(scalars[name])
    derived = {"W": pl.casimir_w, "J3": pl.j_three, "Jp": pl.j_plus, "Jm": pl.j_minus}
    if name in derived:
        return derived[name]()
    return gen(name)


def _scalar_of(x: Element, what: str, pos: int) -> Scalar:
    s = x.scalar_value()
    if s is None:
        raise ParseError(f"{what} must be a scalar", pos)
    return s


def evaluate(node) -> Element:
    if isinstance(node, Num):
        return Element.scalar(node.value)
    if isinstance(node, Bracket):
        return Element.scalar(qbracket(node.n))
    if isinstance(node, Sym):
        return _symbol(node.name)
    if isinstance(node, Neg):
        return -evaluate(node.arg)
    if isinstance(node, Add):
        left, right = evaluate(node.left), evaluate(node.right)
        return left + right if node.sign > 0 else left - right
    if isinstance(node, Mul):
        return evaluate(node.left) * evaluate(node.right)
    if isinstance(node, Div):
        den = _scalar_of(evaluate(node.right), "divisor", node.pos)
        if not den:
            raise ParseError("division by zero", node.pos)
        return evaluate(node.left).scale(ONE / den)
    if isinstance(node, Pow):
        return _power(node)
    raise TypeError(f"not an AST node: {node!r}")


def _power(node: Pow) -> Element:
    e = node.exp
    if e.denominator != 1:
        if node.base == Sym("q", node.base.pos) and e.denominator == 2:
            return Element.scalar(qpow(e.numerator))
        raise ParseError("the only fractional powers allowed are q^(k/2)", node.pos)
    n = e.numerator
    base = evaluate(node.base)
    if n >= 0:
        return base ** n
    s = base.scalar_value()
    if s is not None:
        if not s:
            raise ParseError("negative power of zero", node.pos)
        return Element.scalar(s ** n)
    if base == gen("K"):
        return gen(KINV) ** (-n)
    if base == gen(KINV):
        return gen("K") ** (-n)
    raise ParseError("negative powers are only allowed on scalars, K and Kinv", node.pos)


def parse_element(text: str) -> Element:
    return evaluate(parse(text))
