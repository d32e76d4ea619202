"""Recursive-descent parser for elements, polynomials and scalars.

Grammar (``*`` is mandatory; juxtaposition is an error)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power (('*'|'/') power)*
    power  := atom ('^' nat)?
    atom   := number | generator | 'sqrt' '(' ['-'] nat ')' | '(' expr ')'

The divisor of ``/`` must evaluate to a nonzero scalar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .core import Element, Presentation
from .errors import ParseError
from .poly import Poly
from .scalar import Scalar, as_scalar, sqrt_rational


@dataclass(frozen=True)
class Num:
    value: Scalar


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Quotient:
    num: "Expr"
    den: "Expr"


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Expr"], ...]  # (sign, term)


Expr = Union[Num, Gen, Power, Product, Quotient, Sum]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:  # only trailing whitespace is left
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("id", ident, start))
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r}", start)
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str, generators: frozenset[str]):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.generators = generators

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Expr:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        e = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            if kind in ("num", "id") or v == "(":
                raise ParseError("implicit multiplication is not allowed; use '*'", pos)
            raise ParseError(f"unexpected {v!r}", pos)
        return e

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "sym":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Expr:
        node = self.power()
        factors = [node]
        while self.peek()[0] == "sym" and self.peek()[1] in "*/":
            op = self.take()[1]
            rhs = self.power()
            if op == "*":
                factors.append(rhs)
            else:
                left = factors[0] if len(factors) == 1 else Product(tuple(factors))
                factors = [Quotient(left, rhs)]
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "sym":
            self.take()
            kind, v, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return Power(base, int(v))
        return base

    def atom(self) -> Expr:
        kind, v, pos = self.take()
        if kind == "num":
            return Num(Fraction(int(v)))
        if kind == "id":
            if v == "sqrt":
                self.expect("(")
                neg = False
                if self.peek()[1] == "-":
                    self.take()
                    neg = True
                k2, n, p2 = self.take()
                if k2 != "num":
                    raise ParseError("sqrt takes an integer literal", p2)
                self.expect(")")
                n = -int(n) if neg else int(n)
                return Num(sqrt_rational(n))
            if v not in self.generators:
                if len(v) > 1 and all(ch in self.generators for ch in v):
                    raise ParseError("implicit multiplication is not allowed; use '*'", pos + 1)
                raise ParseError(
                    f"unknown generator {v!r} (expected one of {', '.join(sorted(self.generators))})",
                    pos,
                )
            return Gen(v)
        if v == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def parse_ast(text: str, generators=frozenset("duh")) -> Expr:
    return Parser(text, frozenset(generators)).parse()


def evaluate(node: Expr, gen: Callable[[str], object], scalar: Callable[[Scalar], object],
             constant_value: Callable[[object], Scalar | None]):
    def ev(n):
        if isinstance(n, Num):
            return scalar(n.value)
        if isinstance(n, Gen):
            return gen(n.name)
        if isinstance(n, Power):
            return ev(n.base) ** n.exp
        if isinstance(n, Product):
            acc = ev(n.factors[0])
            for f in n.factors[1:]:
                acc = acc * ev(f)
            return acc
        if isinstance(n, Quotient):
            den = constant_value(ev(n.den))
            if den is None:
                raise ParseError("can only divide by a scalar")
            if den == 0:
                raise ParseError("division by zero")
            return ev(n.num) * (1 / den)
        if isinstance(n, Sum):
            acc = scalar(Fraction(0))
            for sign, t in n.terms:
                acc = acc + ev(t) if sign > 0 else acc - ev(t)
            return acc
        raise TypeError(n)

    return ev(node)


def parse_element(text: str, pres: Presentation) -> Element:
    ast = parse_ast(text, "duh")
    gens = {"d": pres.d, "u": pres.u, "h": pres.h}
    return evaluate(ast, gens.__getitem__, pres.scalar, Element.constant_value)


def parse_poly(text: str, var: str = "X") -> Poly:
    ast = parse_ast(text, {var})
    return evaluate(ast, lambda _: Poly.X(), lambda c: Poly([c]), Poly.constant_value)


def parse_scalar(text) -> Scalar:
    if not isinstance(text, str):
        return as_scalar(text)
    ast = parse_ast(text, ())
    return evaluate(ast, None, lambda c: c, lambda c: c)
