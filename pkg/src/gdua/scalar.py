"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt(D)).

A scalar is either a :class:`~fractions.Fraction` or a :class:`QuadExt`.
``QuadExt`` values are kept canonical: an element whose irrational part
vanishes is returned as a plain ``Fraction``, so ``QuadExt.b`` is never zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

from sympy import factorint

from .errors import (
    IncompatibleFieldError,
    InputError,
    RootOfUnityError,
    UndecidedError,
    ZeroInputError,
)

DEFAULT_SEARCH_BOUND = 64


class QuadExt:
    """The number ``a + b*sqrt(D)`` with rational ``a``, ``b`` and ``b != 0``.

    Build values through :func:`quad` or :func:`sqrt_rational`; the
    constructor assumes its arguments are already canonical.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a: Fraction, b: Fraction, D: int):
        self.a = a
        self.b = b
        self.D = D

    # -- coercion helpers -------------------------------------------------
    def _parts(self, other) -> tuple[Fraction, Fraction] | None:
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise IncompatibleFieldError(
                    f"cannot combine elements of Q(sqrt({self.D})) and Q(sqrt({other.D}))"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(self.a + p[0], self.b + p[1], self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(self.a - p[0], self.b - p[1], self.D)

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(p[0] - self.a, p[1] - self.b, self.D)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, e = p
        return quad(self.a * c + self.D * self.b * e, self.a * e + self.b * c, self.D)

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        n = self.norm()
        # n != 0 because D is not a square and b != 0
        return QuadExt(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            self._parts(other)
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return quad(self.a / other, self.b / other, self.D)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * Fraction(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base: Scalar = self if n >= 0 else self.inverse()
        n = abs(n)
        result: Scalar = Fraction(1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field data -------------------------------------------------------
    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.D)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadExt({self.a!s}, {self.b!s}, {self.D})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadExt]


def quad(a, b, D: int) -> Scalar:
    """Canonical ``a + b*sqrt(D)``; ``D`` must be square-free and not 0 or 1."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return a
    _check_squarefree(D)
    return QuadExt(a, b, D)


@lru_cache(maxsize=None)
def _check_squarefree(D: int) -> None:
    if D in (0, 1):
        raise InputError(f"D = {D} does not define a quadratic extension")
    if any(e > 1 for e in factorint(abs(D)).values()):
        raise InputError(f"D = {D} is not square-free")


def squarefree_part(n: int) -> tuple[int, int]:
    """Write a nonzero integer as ``c**2 * D`` with ``D`` square-free; return ``(c, D)``."""
    if n == 0:
        raise ZeroInputError("0 has no square-free part")
    c, D = 1, (1 if n > 0 else -1)
    for p, e in factorint(abs(n)).items():
        c *= p ** (e // 2)
        if e % 2:
            D *= p
    return c, D


def sqrt_rational(q) -> Scalar:
    """Exact square root of a rational number, as a Fraction or a QuadExt."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    # sqrt(num/den) = sqrt(num*den)/den
    c, D = squarefree_part(num * den)
    if D == 1:
        return Fraction(c, den)
    return QuadExt(Fraction(0), Fraction(c, den), D)


def as_scalar(x) -> Scalar:
    if isinstance(x, (Fraction, QuadExt)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {x!r}") from exc
    raise TypeError(f"cannot interpret {x!r} as a scalar")


def field_of(*xs) -> int | None:
    """The common ``D`` of the given scalars (None if all rational)."""
    D = None
    for x in xs:
        if isinstance(x, QuadExt):
            if D is not None and D != x.D:
                raise IncompatibleFieldError(
                    f"scalars live in Q(sqrt({D})) and Q(sqrt({x.D}))"
                )
            D = x.D
    return D


def norm(x: Scalar, D: int | None = None) -> Fraction:
    """Field norm; a rational is normed from Q(sqrt(D)) when ``D`` is given."""
    if isinstance(x, QuadExt):
        return x.norm()
    x = Fraction(x)
    return x * x if D is not None else x


def format_scalar(x: Scalar) -> str:
    """Text form accepted back by the expression parser."""
    if isinstance(x, QuadExt):
        den = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
        A, B = x.a * den, x.b * den
        sign = "+" if B > 0 else "-"
        body = f"({A.numerator}{sign}{abs(B.numerator)}*sqrt({x.D}))"
        return body if den == 1 else f"{body}/{den}"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def root_of_unity_order(x: Scalar) -> int | None:
    """Multiplicative order of ``x`` if it is a root of unity, else None.

    Over a field of degree at most 2 the minimal polynomial of a root of unity
    is one of the cyclotomic polynomials of order 1, 2, 3, 4 or 6.
    """
    if isinstance(x, QuadExt):
        if x.norm() != 1:
            return None
        return {-1: 3, 0: 4, 1: 6}.get(x.trace())
    x = Fraction(x)
    if x == 0:
        raise ZeroInputError("0 is not a unit")
    return {1: 1, -1: 2}.get(x)


def is_root_of_unity(x: Scalar) -> bool:
    return root_of_unity_order(x) is not None


def roots_of_unity(D: int | None) -> list[Scalar]:
    """All roots of unity of Q (``D`` None) or of Q(sqrt(D))."""
    one, half = Fraction(1), Fraction(1, 2)
    roots: list[Scalar] = [one, -one]
    if D == -1:
        roots += [quad(0, 1, -1), quad(0, -1, -1)]
    elif D == -3:
        roots += [quad(s * half, t * half, -3) for s in (1, -1) for t in (1, -1)]
    return roots


# ---------------------------------------------------------------------------
# multiplicative dependence
# ---------------------------------------------------------------------------

def _valuations(q: Fraction) -> dict[int, int]:
    v = dict(factorint(q.numerator)) if abs(q.numerator) > 1 else {}
    for p, e in (factorint(q.denominator).items() if q.denominator > 1 else ()):
        v[p] = v.get(p, 0) - e
    v.pop(-1, None)
    return v


def _valuation_ratio(vs: dict[int, int], vr: dict[int, int]) -> Fraction | None:
    """The rational c with vs = c * vr (vr nonzero), or None if not proportional."""
    p0 = next(iter(vr))
    c = Fraction(vs.get(p0, 0), vr[p0])
    for p in set(vs) | set(vr):
        if vs.get(p, 0) != c * vr.get(p, 0):
            return None
    return c


def _bounded_search(r: Scalar, s: Scalar, bound: int) -> tuple[int, int]:
    r_pows = {0: Fraction(1)}
    rp, rm = Fraction(1), Fraction(1)
    r_inv = 1 / r
    for j in range(1, bound + 1):
        rp, rm = rp * r, rm * r_inv
        r_pows[j], r_pows[-j] = rp, rm
    lookup: dict[Scalar, int] = {}
    for j in sorted(r_pows, key=abs):
        lookup.setdefault(r_pows[j], j)
    si: Scalar = Fraction(1)
    for i in range(1, bound + 1):
        si = si * s
        if si in lookup:
            return i, lookup[si]
    raise UndecidedError(
        f"no multiplicative relation s^i = r^j with |i|, |j| <= {bound}; "
        "increase the search bound"
    )


def mult_dependence(r: Scalar, s: Scalar, bound: int = DEFAULT_SEARCH_BOUND) -> tuple[int, int]:
    """Return ``(tau, epsilon)``: the least ``tau > 0`` with ``s**tau == r**epsilon``.

    ``(0, 0)`` means ``r`` and ``s`` are multiplicatively independent.  Raises
    :class:`UndecidedError` only when both field norms are units and the
    bounded search fails.
    """
    r, s = as_scalar(r), as_scalar(s)
    if r == 0 or s == 0:
        raise ZeroInputError("multiplicative dependence needs nonzero r and s")
    if is_root_of_unity(r):
        raise RootOfUnityError("r is a root of unity")
    D = field_of(r, s)
    vr, vs = _valuations(norm(r, D)), _valuations(norm(s, D))
    if not vr:
        if vs:
            # N(s)^i = +-1 forces i = 0
            return 0, 0
        return _bounded_search(r, s, bound)
    c = _valuation_ratio(vs, vr)
    if c is None:
        return 0, 0
    q, p = c.denominator, c.numerator
    order = root_of_unity_order(s**q / r**p)
    if order is None:
        return 0, 0
    return q * order, p * order
