"""Conformality, tau/epsilon, the center, and normal elements."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    BiPoly,
    Element,
    Frame,
    Presentation,
    gamma_reduction,
    graded_components,
    to_gwa_view,
)
from .errors import (
    NotConformalError,
    NotNormalError,
    RootOfUnityError,
)
from .linalg import nullspace
from .poly import Poly, rho
from .scalar import DEFAULT_SEARCH_BOUND, Scalar, mult_dependence


# ---------------------------------------------------------------------------
# conformality
# ---------------------------------------------------------------------------

@dataclass
class ConformalData:
    """Result of the conformality test.

    ``g`` solves ``s*g(X) - g(r*X - gamma') = normalized_f`` in the working
    presentation ``frame`` (``gamma' = 0`` unless ``r = 1``);
    ``g_original`` solves ``s*g(X) - g(r*X - gamma) = f`` for the input.
    ``k_def`` is ``u*d - g(h)`` in ``frame``.
    """

    pres: Presentation
    conformal: bool
    normalized_f: Poly
    frame: Presentation
    g: Poly | None = None
    g_original: Poly | None = None
    k_def: Element | None = None
    reason: str = ""


def _solve_r_one(f: Poly, s: Scalar, gamma: Scalar) -> Poly:
    """Solve ``s*g(X) - g(X - gamma) = f`` for ``r = 1`` by back-substitution.

    For ``s != 1`` the system is triangular with diagonal ``s - 1`` and
    ``deg g = deg f``.  For ``s = 1`` (so ``gamma != 0``) the leading
    coefficient of ``g`` sits one degree higher, divided by ``(n+1)*gamma``;
    the constant term is set to 0.
    """
    g = Poly()

    def lhs(p: Poly) -> Poly:
        return p * s - p.affine_compose(1, -gamma)

    if f.is_zero():
        return g
    n = int(f.degree)
    for i in range(n, -1, -1):
        rest = f - lhs(g)
        if s != 1:
            g = g + Poly.monomial(i, rest[i] / (s - 1))
        else:
            g = g + Poly.monomial(i + 1, rest[i] / ((i + 1) * gamma))
    return g


def conformal(pres: Presentation) -> ConformalData:
    pres.require_noetherian()
    r, s, gamma, f = pres.r, pres.s, pres.gamma, pres.f
    if r != 1:
        fr = gamma_reduction(pres)
        F = fr.target
        ft = F.f
        bad = [i for i in ft.support() if s == r**i]
        if bad:
            return ConformalData(
                pres, False, ft, F,
                reason=f"s = r^{bad[0]} with a nonzero coefficient of X^{bad[0]}",
            )
        g = Poly(
            (ft[i] / (s - r**i) if ft[i] != 0 else 0) for i in range(len(ft.coeffs))
        )
        g_orig = g.affine_compose(r - 1, -gamma) if gamma != 0 else g
    else:
        F, ft = pres, f
        if s == 1 and gamma == 0 and not f.is_zero():
            return ConformalData(
                pres, False, f, pres, reason="r = s = 1, gamma = 0 and f is nonzero"
            )
        g = g_orig = _solve_r_one(f, s, gamma)
    k = F.u * F.d - F.h_poly(g)
    return ConformalData(pres, True, ft, F, g, g_orig, k)


def require_conformal(pres: Presentation) -> ConformalData:
    data = conformal(pres)
    if not data.conformal:
        raise NotConformalError(f"{pres} is not conformal: {data.reason}")
    return data


# ---------------------------------------------------------------------------
# tau, epsilon, rho
# ---------------------------------------------------------------------------

def require_generic_r(pres: Presentation) -> None:
    pres.require_noetherian()
    if not pres.r_not_root_of_unity:
        raise RootOfUnityError("r is a root of unity")


def tau_epsilon(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> tuple[int, int]:
    require_generic_r(pres)
    return mult_dependence(pres.r, pres.s, bound)


def rho_reduced(pres: Presentation) -> int | None:
    """``rho`` of ``f~`` (None when ``f = 0``)."""
    ft = gamma_reduction(pres).target.f if pres.r != 1 else pres.f
    return None if ft.is_zero() else rho(ft)


# ---------------------------------------------------------------------------
# the (h, k) coordinates of the degree-zero part
# ---------------------------------------------------------------------------

@dataclass
class Working:
    """Everything needed to compute in the GWA coordinates ``h``, ``k``."""

    pres: Presentation
    frame: Frame
    conf: ConformalData
    tau: int
    eps: int

    @property
    def F(self) -> Presentation:
        return self.frame.target

    @property
    def k(self) -> Element:
        return self.conf.k_def

    def hk_element(self, p: BiPoly) -> Element:
        """``p(h, k)`` as an element of the reduced presentation."""
        return p.evaluate(self.F.h, self.k, self.F.one())

    def hk_original(self, p: BiPoly) -> Element:
        return self.frame.backward(self.hk_element(p))


def working(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> Working:
    require_generic_r(pres)
    conf = require_conformal(pres)
    tau, eps = mult_dependence(pres.r, pres.s, bound)
    return Working(pres, gamma_reduction(pres), conf, tau, eps)


def a_to_k(p: BiPoly, g: Poly) -> BiPoly:
    """Rewrite ``p(h, a)`` as a polynomial in ``h`` and ``k = a - g(h)``."""
    one = BiPoly({(0, 0): 1})
    return p.evaluate(BiPoly.var(0), BiPoly.var(1) + BiPoly.from_poly(g), one)


# ---------------------------------------------------------------------------
# center
# ---------------------------------------------------------------------------

@dataclass
class CenterDescription:
    tag: str  # "ScalarsOnly" or "PolynomialInGenerator"
    tau: int
    epsilon: int
    generator: Element | None = None  # in the input presentation
    generator_hk: BiPoly | None = None  # h^(-eps) k^tau in reduced coordinates


def center(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> CenterDescription:
    w = working(pres, bound)
    if w.tau == 0 or w.eps > 0:
        return CenterDescription("ScalarsOnly", w.tau, w.eps)
    gen = BiPoly({(-w.eps, w.tau): 1})
    return CenterDescription(
        "PolynomialInGenerator", w.tau, w.eps, w.hk_original(gen), gen
    )


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def central_scan(pres: Presentation, degree: int = 4, bound: int = DEFAULT_SEARCH_BOUND):
    """Brute force: all central ``p(h, k)`` with h- and k-degree at most ``degree``.

    Returns a basis of the solution space as a list of ``BiPoly`` in ``(h, k)``.
    """
    w = working(pres, bound)
    F = w.F
    monos = [(i, j) for i in range(degree + 1) for j in range(degree + 1)]
    images = []
    for m in monos:
        e = w.hk_element(BiPoly({m: 1}))
        images.append([commutator(e, gen) for gen in F.gens()])
    keys = sorted({t for row in images for c in row for t in c.terms})
    cols = []
    for row in images:
        cols.append([c.coefficient(*t) for c in row for t in keys])
    nrows = len(keys) * 3
    matrix = [[cols[j][i] for j in range(len(monos))] for i in range(nrows)]
    return [
        BiPoly({m: v for m, v in zip(monos, vec) if v != 0})
        for vec in nullspace(matrix, len(monos))
    ]


# ---------------------------------------------------------------------------
# normal elements
# ---------------------------------------------------------------------------

@dataclass
class NormalityResult:
    normal: bool
    lam: Scalar | None = None
    mu: Scalar | None = None
    witness: Element | None = None
    reason: str = ""

    def __bool__(self):
        return self.normal


def _ratio(left: Element, right: Element) -> tuple[Scalar | None, Element]:
    """The scalar c with ``left = c*right`` if it exists, plus the residual."""
    if right.is_zero():
        return None, left
    m = next(iter(right.terms))
    c = left.coefficient(*m) / right.terms[m]
    return c, left - right * c


def is_normal(pres: Presentation, t: Element, bound: int = DEFAULT_SEARCH_BOUND) -> NormalityResult:
    """Decide whether ``t`` is normal, with ``t*d = lam*d*t`` and ``t*u = mu*u*t``."""
    working(pres, bound)
    pres._check(t)
    if t.is_zero():
        raise ValueError("the zero element is not considered")
    d, u = pres.d, pres.u
    lam, res = _ratio(t * d, d * t)
    if res:
        return NormalityResult(False, witness=res, reason="t*d is not a multiple of d*t")
    mu, res = _ratio(t * u, u * t)
    if res:
        return NormalityResult(False, lam=lam, witness=res, reason="t*u is not a multiple of u*t")
    if not t.is_homogeneous():
        # h*t_j = t_j*sigma^j(h) forces a homogeneous normal element
        return NormalityResult(False, lam, mu, reason="t is not homogeneous")
    return NormalityResult(True, lam, mu)


@dataclass
class NormalClassification:
    """``t = scalar_part * h^h_power * k^k_power * q(h, k) * ladder``.

    ``q_case`` is "a" (q = 1, tau = 0), "b" (q a polynomial in the central
    generator ``h^(-eps) k^tau`` with constant term 1) or "c" (``q`` a
    form ``sum d_i (h^eps)^(l-i) (k^tau)^i`` with ``d_0 = 1``).  The
    coefficients are listed in ``q_coefficients``.  ``h`` and ``k`` are the
    coordinates of the reduced presentation.
    """

    scalar_part: Scalar
    h_power: int
    k_power: int
    q: BiPoly
    q_case: str
    q_coefficients: list[Scalar]
    ladder: tuple[str, int] | None
    grade: int = 0
    extra: dict = field(default_factory=dict)


def classify_normal(pres: Presentation, t: Element, bound: int = DEFAULT_SEARCH_BOUND) -> NormalClassification:
    if not is_normal(pres, t, bound):
        raise NotNormalError("element is not normal")
    w = working(pres, bound)
    tt = w.frame.forward(t)
    ((grade, _),) = graded_components(tt).items()
    p = to_gwa_view(w.F, tt).components[grade]
    p = a_to_k(p, w.conf.g)
    alpha = min(i for i, _ in p.terms)
    beta = min(j for _, j in p.terms)
    q = BiPoly({(i - alpha, j - beta): v for (i, j), v in p.terms.items()})
    tau, eps = w.tau, w.eps
    if tau == 0:
        case = "a"
        coeffs = [q.terms[(0, 0)]]
        if set(q.terms) != {(0, 0)}:
            raise NotNormalError("q is not a scalar although tau = 0")
    elif eps <= 0:
        case = "b"
        coeffs = []
        for (i, j), v in q.terms.items():
            if j % tau or i != -eps * (j // tau):
                raise NotNormalError("q is not a polynomial in the central generator")
        top = max(j for _, j in q.terms) // tau
        coeffs = [q.terms.get((-eps * n, tau * n), Fraction(0)) for n in range(top + 1)]
    else:
        case = "c"
        l = max(j for _, j in q.terms) // tau
        for (i, j), v in q.terms.items():
            if j % tau or i != eps * (l - j // tau):
                raise NotNormalError("q is not of the form sum d_i h^(eps(l-i)) k^(tau i)")
        coeffs = [q.terms.get((eps * (l - n), tau * n), Fraction(0)) for n in range(l + 1)]
    lead = coeffs[0]
    coeffs = [c / lead for c in coeffs]
    q = BiPoly({m: v / lead for m, v in q.terms.items()})
    ladder = None
    if grade > 0:
        ladder = ("YPower", grade)
    elif grade < 0:
        ladder = ("XPower", -grade)
    return NormalClassification(lead, alpha, beta, q, case, coeffs, ladder, grade)


def rebuild_normal(pres: Presentation, c: NormalClassification, bound: int = DEFAULT_SEARCH_BOUND) -> Element:
    """Multiply the factors of a classification back together."""
    w = working(pres, bound)
    F = w.F
    p = BiPoly({(c.h_power, c.k_power): c.scalar_part}) * c.q
    x = w.hk_element(p)
    if c.grade > 0:
        x = x * F.u**c.grade
    elif c.grade < 0:
        x = x * F.d ** (-c.grade)
    return w.frame.backward(x)


def xn_conditions(pres: Presentation, n: int, bound: int = DEFAULT_SEARCH_BOUND) -> dict[str, bool]:
    """The five equivalent conditions for normality of ``x^n`` (``x = d``, ``y = u``)."""
    if n < 1:
        raise ValueError("n must be positive")
    w = working(pres, bound)
    d, u = pres.d, pres.u
    ft = w.conf.normalized_f
    tau, eps = w.tau, w.eps
    if ft.is_zero():
        b = True
    elif len(ft.support()) == 1:
        m = int(ft.degree)
        b = pres.s != pres.r**m and tau > 0 and eps == tau * m and n % tau == 0
    else:
        b = False
    dn, un = d**n, u**n
    return {
        "a": is_normal(pres, dn, bound).normal,
        "b": b,
        "c": u * dn == dn * u * pres.s ** (-n),
        "d": d * un == un * d * pres.s**n,
        "e": is_normal(pres, un, bound).normal,
    }
