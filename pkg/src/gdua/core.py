"""Generalized down-up algebras: presentations, PBW elements, morphisms.

``L(f, r, s, gamma)`` is generated by ``d``, ``u``, ``h`` subject to::

    d*h - r*h*d + gamma*d = 0
    h*u - r*u*h + gamma*u = 0
    d*u - s*u*d + f(h)    = 0

Elements are stored in the PBW basis ``u^a h^b d^c``.  Multiplication is
computed from the closed forms ``d P(h) = P(rh - gamma) d``,
``P(h) u = u P(rh - gamma)`` and
``d u^i = s^i u^i d - u^(i-1) F_i(h)`` with ``F_i = s F_(i-1) + sigma^(i-1)(f)``.
These rewriting rules are valid for every choice of parameters, including
``rs = 0``, where the PBW words still span but need not be independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import NotNoetherianError, PresentationMismatch, PreconditionError
from .poly import Poly, format_term, join_terms
from .scalar import QuadExt, Scalar, as_scalar, field_of, is_root_of_unity

Monomial = tuple[int, int, int]  # (power of u, power of h, power of d)
_SCALAR_TYPES = (int, Fraction, QuadExt)


@dataclass(frozen=True)
class Presentation:
    f: Poly
    r: Scalar
    s: Scalar
    gamma: Scalar = Fraction(0)
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        f = self.f if isinstance(self.f, Poly) else Poly(self.f)
        object.__setattr__(self, "f", f)
        for name in ("r", "s", "gamma"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        field_of(self.r, self.s, self.gamma, *f.coeffs)

    def __str__(self):
        from .scalar import format_scalar

        return (
            f"L({self.f}, {format_scalar(self.r)}, {format_scalar(self.s)}, "
            f"{format_scalar(self.gamma)})"
        )

    @property
    def field(self) -> int | None:
        return field_of(self.r, self.s, self.gamma, *self.f.coeffs)

    @cached_property
    def noetherian(self) -> bool:
        return self.r != 0 and self.s != 0

    @cached_property
    def r_not_root_of_unity(self) -> bool:
        return self.r != 0 and not is_root_of_unity(self.r)

    def require_noetherian(self) -> None:
        if not self.noetherian:
            raise NotNoetherianError(f"{self} is not Noetherian: rs = 0")

    # -- element constructors ---------------------------------------------
    def element(self, terms: Mapping[Monomial, object] | None = None) -> Element:
        return Element(self, terms or {})

    def coerce(self, c) -> Scalar:
        """``c`` as a scalar of the base field (``Q(sqrt(D))`` or any extension if rational)."""
        c = as_scalar(c)
        field_of(c, self.r, self.s, self.gamma, *self.f.coeffs)
        return c

    def scalar(self, c) -> Element:
        c = self.coerce(c)
        return Element._raw(self, {(0, 0, 0): c} if c != 0 else {})

    def one(self) -> Element:
        return self.scalar(1)

    def zero(self) -> Element:
        return Element._raw(self, {})

    def monomial(self, a: int, b: int, c: int, coef=1) -> Element:
        return Element(self, {(a, b, c): coef})

    @property
    def d(self) -> Element:
        return self.monomial(0, 0, 1)

    @property
    def u(self) -> Element:
        return self.monomial(1, 0, 0)

    @property
    def h(self) -> Element:
        return self.monomial(0, 1, 0)

    def gens(self) -> tuple[Element, Element, Element]:
        return self.d, self.u, self.h

    def h_poly(self, p: Poly) -> Element:
        return Element(self, {(0, i, 0): c for i, c in enumerate(p.coeffs)})

    # -- rewriting machinery ----------------------------------------------
    def sigma_h(self, k: int) -> tuple[Scalar, Scalar]:
        """``sigma^k(h) = lam*h + mu`` for ``sigma(h) = r*h - gamma``; returns ``(lam, mu)``."""
        cache = self._cache.setdefault("sigma", {0: (Fraction(1), Fraction(0))})
        if k not in cache:
            lam, mu = self.sigma_h(k - 1)
            cache[k] = (lam * self.r, mu * self.r - self.gamma)
        return cache[k]

    def sigma_pow(self, p: Poly, k: int) -> Poly:
        if k == 0 or len(p.coeffs) <= 1:
            return p
        lam, mu = self.sigma_h(k)
        return p.affine_compose(lam, mu)

    def _F(self, i: int) -> Poly:
        cache = self._cache.setdefault("F", {0: Poly()})
        if i not in cache:
            cache[i] = self._F(i - 1) * self.s + self.sigma_pow(self.f, i - 1)
        return cache[i]

    def _du(self, c: int, a: int) -> dict[tuple[int, int], Poly]:
        """``d^c u^a`` as ``{(i, j): R}`` meaning ``sum u^i R(h) d^j``."""
        cache = self._cache.setdefault("du", {})
        key = (c, a)
        if key in cache:
            return cache[key]
        if c == 0:
            out = {(a, 0): Poly([1])}
        else:
            out: dict[tuple[int, int], Poly] = {}
            for (i, j), R in self._du(c - 1, a).items():
                t = self.sigma_pow(R, 1) * (self.s**i)
                _acc(out, (i, j + 1), t)
                if i >= 1:
                    _acc(out, (i - 1, j), -(self._F(i) * R))
            out = {k: v for k, v in out.items() if v}
        cache[key] = out
        return out

    def mul(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        if not x.terms or not y.terms:
            return self.zero()
        X, Y = _grouped(x.terms), _grouped(y.terms)
        out: dict[tuple[int, int], Poly] = {}
        shifted: dict[tuple[tuple[int, int], int], Poly] = {}
        for (a, c), P in X.items():
            for (a2, c2), Q in Y.items():
                for (i, j), R in self._du(c, a2).items():
                    key = ((a2, c2), j)
                    if key not in shifted:
                        shifted[key] = self.sigma_pow(Q, j)
                    _acc(out, (a + i, j + c2), self.sigma_pow(P, i) * R * shifted[key])
        return Element._raw(self, _ungrouped(out))

    def normal_form(self, word: Iterable) -> Element:
        """Normal form of a product of generator letters, scalars and elements."""
        acc = self.one()
        for item in word:
            if isinstance(item, str):
                try:
                    item = {"d": self.d, "u": self.u, "h": self.h}[item]
                except KeyError:
                    raise ValueError(f"unknown generator {item!r}") from None
            acc = acc * item
        return acc

    def _check(self, x: Element) -> None:
        if x.pres is not self and x.pres != self:
            raise PresentationMismatch(f"element of {x.pres} used in {self}")


def _acc(out: dict, key, value) -> None:
    if key in out:
        out[key] = out[key] + value
    else:
        out[key] = value


def _grouped(terms: Mapping[Monomial, Scalar]) -> dict[tuple[int, int], Poly]:
    coeffs: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (a, b, c), v in terms.items():
        coeffs.setdefault((a, c), {})[b] = v
    out = {}
    for key, cs in coeffs.items():
        n = max(cs) + 1
        out[key] = Poly(cs.get(i, 0) for i in range(n))
    return out


def _ungrouped(groups: Mapping[tuple[int, int], Poly]) -> dict[Monomial, Scalar]:
    terms = {}
    for (a, c), P in groups.items():
        for b, v in enumerate(P.coeffs):
            if v != 0:
                terms[(a, b, c)] = v
    return terms


class Element:
    """A finite linear combination of PBW monomials ``u^a h^b d^c``."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: Mapping[Monomial, object]):
        self.pres = pres
        clean = {}
        for (a, b, c), v in terms.items():
            if min(a, b, c) < 0:
                raise ValueError("monomial exponents must be nonnegative")
            v = pres.coerce(v)
            if v != 0:
                clean[(a, b, c)] = v
        self.terms: dict[Monomial, Scalar] = clean

    @classmethod
    def _raw(cls, pres: Presentation, terms: dict[Monomial, Scalar]) -> Element:
        obj = cls.__new__(cls)
        obj.pres = pres
        obj.terms = terms
        return obj

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other) -> Element | None:
        if isinstance(other, Element):
            self.pres._check(other)
            return other
        if isinstance(other, _SCALAR_TYPES):
            return self.pres.scalar(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, v in o.terms.items():
            w = out.get(m, 0) + v
            if w == 0:
                out.pop(m, None)
            else:
                out[m] = w
        return Element._raw(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.pres, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> Element:
        c = self.pres.coerce(c)
        if c == 0:
            return self.pres.zero()
        return Element._raw(self.pres, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        if isinstance(other, Element):
            return self.pres.mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        if isinstance(c, _SCALAR_TYPES):
            if c == 0:
                raise ZeroDivisionError("division of an element by zero")
            return self.scale(1 / as_scalar(c))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("elements can only be raised to nonnegative integer powers")
        result, base = self.pres.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.pres == other.pres and self.terms == other.terms
        if isinstance(other, _SCALAR_TYPES):
            return self.terms == self.pres.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.pres, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ---------------------------------------------------------
    def coefficient(self, a: int, b: int, c: int) -> Scalar:
        return self.terms.get((a, b, c), Fraction(0))

    def constant_value(self) -> Scalar | None:
        """The scalar this element equals, or None if it is not a scalar."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {(0, 0, 0)}:
            return self.terms[(0, 0, 0)]
        return None

    def grades(self) -> set[int]:
        return {a - c for (a, _, c) in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def total_degree(self) -> int:
        return max((a + b + c for (a, b, c) in self.terms), default=-1)

    def __repr__(self):
        return f"Element({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def monomial_sort_key(m: Monomial) -> tuple[int, int, int, int]:
    a, b, c = m
    return (a - c, a, b, c)


def format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip("uhd", m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_element(x: Element) -> str:
    """Text form: terms by decreasing (Z-degree, a, b, c), PBW order u, h, d."""
    if not x.terms:
        return "0"
    pieces = [
        format_term(x.terms[m], format_monomial(m))
        for m in sorted(x.terms, key=monomial_sort_key, reverse=True)
    ]
    return join_terms(pieces)


# ---------------------------------------------------------------------------
# grading and the generalized Weyl algebra view
# ---------------------------------------------------------------------------

def normal_form(pres: Presentation, word: Iterable) -> Element:
    return pres.normal_form(word)


def mul(pres: Presentation, x: Element, y: Element) -> Element:
    return pres.mul(x, y)


def graded_components(x: Element) -> dict[int, Element]:
    parts: dict[int, dict[Monomial, Scalar]] = {}
    for (a, b, c), v in x.terms.items():
        parts.setdefault(a - c, {})[(a, b, c)] = v
    return {i: Element._raw(x.pres, t) for i, t in sorted(parts.items())}


class BiPoly:
    """Commutative polynomial in two variables, ``{(i, j): coef}`` for ``v1^i v2^j``.

    Used for elements of ``D = K[h, a]`` (``a = ud``) and ``K[h, k]``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        self.terms: dict[tuple[int, int], Scalar] = {
            k: as_scalar(v) for k, v in (terms or {}).items() if v != 0
        }

    @classmethod
    def var(cls, which: int) -> BiPoly:
        return cls({(1, 0) if which == 0 else (0, 1): 1})

    @classmethod
    def from_poly(cls, p: Poly, which: int = 0) -> BiPoly:
        return cls({((i, 0) if which == 0 else (0, i)): c for i, c in enumerate(p.coeffs)})

    def _lift(self, other) -> BiPoly | None:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return BiPoly({(0, 0): other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Scalar] = {}
        for (i, j), v in self.terms.items():
            for (k, l), w in o.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + v * w
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, base = BiPoly({(0, 0): 1}), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, v1, v2, one):
        """Substitute ``v1``, ``v2`` (any commuting ring values); ``one`` is the unit."""
        acc = one * 0
        p1: dict[int, object] = {0: one}
        p2: dict[int, object] = {0: one}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        for (i, j), v in self.terms.items():
            acc = acc + power(p1, v1, i) * power(p2, v2, j) * v
        return acc

    def __repr__(self):
        return f"BiPoly({self.terms!r})"

    def format(self, names: tuple[str, str] = ("h", "a")) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (i, j) in sorted(self.terms, reverse=True):
            parts = [
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, (i, j)) if e
            ]
            pieces.append(format_term(self.terms[(i, j)], "*".join(parts)))
        return join_terms(pieces)


def d_element(pres: Presentation, p: BiPoly) -> Element:
    """The element ``p(h, a)`` of ``L_0`` with ``a = u*d``."""
    return p.evaluate(pres.h, pres.u * pres.d, pres.one())


def sigma_d(pres: Presentation, p: BiPoly, times: int = 1) -> BiPoly:
    """``sigma^times(p)`` for ``sigma(h) = r*h - gamma``, ``sigma(a) = s*a - f(h)``."""
    one = BiPoly({(0, 0): 1})
    h, a = BiPoly.var(0), BiPoly.var(1)
    sh = h * pres.r - pres.gamma
    sa = a * pres.s - BiPoly.from_poly(pres.f)
    for _ in range(times):
        p = p.evaluate(sh, sa, one)
    return p


@dataclass
class GwaView:
    """``x = sum_i p_i(h, a) * t_i`` with ``t_i = u^i`` (i > 0), ``d^(-i)`` (i < 0), 1 (i = 0)."""

    pres: Presentation
    components: dict[int, BiPoly]

    @property
    def sigma_r(self) -> Scalar:
        return self.pres.r

    @property
    def sigma_s(self) -> Scalar:
        return self.pres.s


def _gwa_basis(pres: Presentation, grade: int, b: int, m: int) -> Element:
    base = pres.h**b * (pres.u * pres.d) ** m
    if grade > 0:
        return base * pres.u**grade
    if grade < 0:
        return base * pres.d ** (-grade)
    return base


def to_gwa_view(pres: Presentation, x: Element) -> GwaView:
    pres.require_noetherian()
    pres._check(x)
    components = {}
    for grade, comp in graded_components(x).items():
        p: dict[tuple[int, int], Scalar] = {}
        remaining = comp
        while remaining:
            # leading PBW term: largest power of a, then of h
            a, b, c = max(remaining.terms, key=lambda t: (min(t[0], t[2]), t[1]))
            m = min(a, c)
            basis = _gwa_basis(pres, grade, b, m)
            ratio = remaining.terms[(a, b, c)] / basis.coefficient(a, b, c)
            p[(b, m)] = p.get((b, m), 0) + ratio
            remaining = remaining - basis * ratio
        components[grade] = BiPoly(p)
    return GwaView(pres, components)


def from_gwa_view(view: GwaView) -> Element:
    pres = view.pres
    out = pres.zero()
    for grade, p in view.components.items():
        t = pres.u**grade if grade >= 0 else pres.d ** (-grade)
        out = out + d_element(pres, p) * t
    return out


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

@dataclass
class MorphismCheck:
    ok: bool
    residuals: dict[str, Element]

    def __bool__(self):
        return self.ok


@dataclass
class Morphism:
    """Algebra map ``src -> dst`` given by the images of ``d``, ``u``, ``h``."""

    src: Presentation
    dst: Presentation
    images: tuple[Element, Element, Element]

    def __post_init__(self):
        self.images = tuple(self.images)
        for img in self.images:
            self.dst._check(img)

    def __call__(self, x: Element) -> Element:
        return apply_morphism(self.src, self.dst, self.images, x)

    def check(self) -> MorphismCheck:
        return check_morphism(self.src, self.dst, self.images)


def apply_morphism(
    src: Presentation,
    dst: Presentation,
    images: Sequence[Element],
    x: Element,
) -> Element:
    src._check(x)
    d_img, u_img, h_img = images
    pw: dict[tuple[str, int], Element] = {}

    def power(name: str, base: Element, n: int) -> Element:
        if (name, n) not in pw:
            pw[(name, n)] = dst.one() if n == 0 else power(name, base, n - 1) * base
        return pw[(name, n)]

    out = dst.zero()
    for (a, b, c), v in x.terms.items():
        term = power("u", u_img, a) * power("h", h_img, b) * power("d", d_img, c)
        out = out + term * v
    return out


def relation_residuals(
    src: Presentation, dst: Presentation, images: Sequence[Element]
) -> dict[str, Element]:
    D, U, H = images
    return {
        "dh": D * H - H * D * src.r + D * src.gamma,
        "hu": H * U - U * H * src.r + U * src.gamma,
        "du": D * U - U * D * src.s + src.f(H),
    }


def check_morphism(
    src: Presentation, dst: Presentation, images: Sequence[Element]
) -> MorphismCheck:
    """Do the images annihilate the three defining relations of ``src``?"""
    residuals = relation_residuals(src, dst, images)
    bad = {k: v for k, v in residuals.items() if v}
    return MorphismCheck(not bad, bad)


def apply_antiauto(pres: Presentation, x: Element) -> Element:
    """The antiautomorphism swapping ``u`` and ``d`` and fixing ``h``.

    It reverses words and swaps letters, so ``u^a h^b d^c -> u^c h^b d^a``,
    which is again a PBW monomial.
    """
    pres._check(x)
    return Element._raw(pres, {(c, b, a): v for (a, b, c), v in x.terms.items()})


def is_zero_divisor_probe(pres: Presentation, x: Element, y: Element) -> bool:
    return pres.mul(x, y).is_zero()


# ---------------------------------------------------------------------------
# standard isomorphisms
# ---------------------------------------------------------------------------

@dataclass
class Frame:
    """An isomorphism ``orig -> target`` together with its inverse."""

    orig: Presentation
    target: Presentation
    forward: Morphism
    backward: Morphism


def gamma_reduction(pres: Presentation) -> Frame:
    """Isomorphism ``L(f, r, s, gamma) -> L(f~, r, s, 0)``, ``f~(X) = f((X + gamma)/(r - 1))``.

    ``h -> (h + gamma)/(r - 1)`` with ``d``, ``u`` fixed.  For ``gamma = 0`` the
    identity frame is returned (no rescaling of ``h``).
    """
    if pres.gamma == 0:
        ident = Morphism(pres, pres, pres.gens())
        return Frame(pres, pres, ident, ident)
    if pres.r == 1:
        raise PreconditionError("gamma cannot be removed when r = 1")
    inv = 1 / (pres.r - 1)
    tgt = Presentation(pres.f.affine_compose(inv, pres.gamma * inv), pres.r, pres.s, 0)
    fwd = Morphism(pres, tgt, (tgt.d, tgt.u, (tgt.h + pres.gamma) * inv))
    bwd = Morphism(tgt, pres, (pres.d, pres.u, pres.h * (pres.r - 1) - pres.gamma))
    return Frame(pres, tgt, fwd, bwd)


def scale_h_iso(pres: Presentation, lam) -> Morphism:
    """``L(f, r, s, gamma) -> L(f(X/lam), r, s, lam*gamma)``: ``h -> h/lam``."""
    lam = as_scalar(lam)
    tgt = Presentation(pres.f.scale_argument(1 / lam), pres.r, pres.s, lam * pres.gamma)
    return Morphism(pres, tgt, (tgt.d, tgt.u, tgt.h / lam))


def scale_u_iso(pres: Presentation, lam) -> Morphism:
    """``L(f, r, s, gamma) -> L(lam*f, r, s, gamma)``: ``u -> u/lam``."""
    lam = as_scalar(lam)
    tgt = Presentation(pres.f * lam, pres.r, pres.s, pres.gamma)
    return Morphism(pres, tgt, (tgt.d, tgt.u / lam, tgt.h))


def downup_iso(pres: Presentation) -> Morphism:
    """For ``f = lam*X + mu``: ``L(f, r, s, gamma) -> L(X, r, s, lam*gamma + (r-1)*mu)``.

    The target is the down-up algebra ``A(r + s, -rs, lam*gamma + (r-1)*mu)``
    on its canonical generators; ``h`` goes to ``(s*u*d - d*u - mu)/lam``.
    """
    if pres.f.degree != 1:
        raise PreconditionError("f must have degree one")
    mu, lam = pres.f[0], pres.f[1]
    tgt = Presentation(Poly.X(), pres.r, pres.s, lam * pres.gamma + (pres.r - 1) * mu)
    h_img = (tgt.u * tgt.d * tgt.s - tgt.d * tgt.u - mu) / lam
    return Morphism(pres, tgt, (tgt.d, tgt.u, h_img))


def swap_roots_iso(pres: Presentation) -> Morphism:
    """``L(X, r, s, gamma) -> L(X, s, r, gamma)``: ``h -> h + (s - r)*u*d``."""
    if pres.f != Poly.X():
        raise PreconditionError("root swap needs f = X")
    tgt = Presentation(Poly.X(), pres.s, pres.r, pres.gamma)
    return Morphism(pres, tgt, (tgt.d, tgt.u, tgt.h + tgt.u * tgt.d * (pres.s - pres.r)))
