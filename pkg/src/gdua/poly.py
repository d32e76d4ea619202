"""Dense univariate polynomials over exact scalars."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import ZeroPolynomialError
from .scalar import Scalar, as_scalar, format_scalar, QuadExt

NEG_INF = float("-inf")


class Poly:
    """Polynomial with coefficients listed from low to high degree.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree ``NEG_INF``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> Poly:
        return cls([0] * n + [c])

    @classmethod
    def X(cls) -> Poly:
        return cls([0, 1])

    # -- basic data -------------------------------------------------------
    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def leading_coefficient(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def support(self) -> set[int]:
        return {i for i, c in enumerate(self.coeffs) if c != 0}

    def constant_value(self) -> Scalar | None:
        """The scalar value of a constant polynomial, else None."""
        return self[0] if len(self.coeffs) <= 1 else None

    # -- ring operations --------------------------------------------------
    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out: list[Scalar] = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_scalar(c)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly(a / c for a in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation and composition ---------------------------------------
    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar, a Poly or an algebra element."""
        if not self.coeffs:
            return x * 0
        acc = x * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, q: Poly) -> Poly:
        return self(q) if self.coeffs else Poly()

    def affine_compose(self, lam, mu) -> Poly:
        """Return ``p(lam*X + mu)``."""
        return self.compose(Poly([mu, lam]))

    def scale_argument(self, lam) -> Poly:
        """Return ``p(lam*X)``."""
        lam = as_scalar(lam)
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * lam
        return Poly(out)

    def __repr__(self):
        return f"Poly({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self, "X")


def support(p: Poly) -> set[int]:
    return p.support()


def affine_compose(p: Poly, lam, mu) -> Poly:
    return p.affine_compose(lam, mu)


def rho(f: Poly) -> int:
    """gcd of ``deg f - i`` over the support of ``f``; 0 when that set is {0}."""
    if f.is_zero():
        raise ZeroPolynomialError("rho is not defined for the zero polynomial")
    n = int(f.degree)
    return reduce(gcd, (n - i for i in f.support()), 0)


def format_poly(p: Poly, var: str = "X") -> str:
    terms = [(i, c) for i, c in enumerate(p.coeffs) if c != 0]
    if not terms:
        return "0"
    pieces = []
    for i, c in reversed(terms):
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        pieces.append(format_term(c, mono))
    return join_terms(pieces)


def format_term(c: Scalar, mono: str) -> str:
    """One signed term ``coefficient*monomial``; the sign is a leading '-' or none."""
    if not mono:
        return format_scalar(c)
    if isinstance(c, QuadExt):
        return f"{format_scalar(c)}*{mono}"
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{format_scalar(c)}*{mono}"


def join_terms(pieces: Sequence[str]) -> str:
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out
