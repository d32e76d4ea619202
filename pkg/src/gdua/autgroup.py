"""Automorphisms and the classification of automorphism groups.

Maps are described by the images of ``(d, u, h)``; in the text ``x = d`` and
``y = u``.  Every constructor works in the reduced presentation
``L(f~, r, s, 0)`` and transports the result back along the reduction
isomorphism when ``gamma != 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    Element,
    Morphism,
    Presentation,
    apply_morphism,
    check_morphism,
)
from .errors import (
    BetaZeroError,
    BothRootsOfUnityError,
    ConstraintViolated,
    GduaError,
    InputError,
    PresentationMismatch,
    WrongInvariantShape,
    ZeroParameterError,
)
from .invariants import Working, conformal, working
from .poly import Poly, rho
from .scalar import (
    DEFAULT_SEARCH_BOUND,
    QuadExt,
    Scalar,
    as_scalar,
    format_scalar,
    is_root_of_unity,
    roots_of_unity,
    sqrt_rational,
)


@dataclass(eq=False)
class Automorphism:
    pres: Presentation
    images: tuple[Element, Element, Element]
    inverse_images: tuple[Element, Element, Element]
    label: str = "Composite"
    params: tuple = ()

    def apply(self, x: Element) -> Element:
        return apply_morphism(self.pres, self.pres, self.images, x)

    __call__ = apply

    def inverse(self) -> Automorphism:
        return invert(self)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.pres == other.pres and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def verify(self) -> bool:
        """Both maps respect the relations and are mutually inverse on generators."""
        P = self.pres
        if not check_morphism(P, P, self.images) or not check_morphism(P, P, self.inverse_images):
            return False
        gens = P.gens()
        fwd_back = [apply_morphism(P, P, self.images, y) for y in self.inverse_images]
        back_fwd = [apply_morphism(P, P, self.inverse_images, y) for y in self.images]
        return list(gens) == fwd_back == back_fwd

    def describe(self) -> str:
        if not self.params:
            return self.label
        return f"{self.label}({', '.join(format_scalar(p) for p in self.params)})"


def identity(pres: Presentation) -> Automorphism:
    return Automorphism(pres, pres.gens(), pres.gens(), "Identity")


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """``a o b``: first ``b``, then ``a``."""
    if a.pres != b.pres:
        raise PresentationMismatch("automorphisms of different algebras")
    images = tuple(a.apply(y) for y in b.images)
    inv = tuple(apply_morphism(b.pres, b.pres, b.inverse_images, y) for y in a.inverse_images)
    return Automorphism(a.pres, images, inv)


def invert(a: Automorphism) -> Automorphism:
    return Automorphism(a.pres, a.inverse_images, a.images, f"Inverse[{a.describe()}]")


def power(a: Automorphism, n: int) -> Automorphism:
    out = identity(a.pres)
    base = a if n >= 0 else invert(a)
    for _ in range(abs(n)):
        out = compose(base, out)
    return out


def apply(a: Automorphism, x: Element) -> Element:
    return a.apply(x)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def _nonzero(**params) -> None:
    for name, v in params.items():
        if v == 0:
            raise ZeroParameterError(f"parameter {name} must be nonzero")


def _lift(w: Working, label: str, params, images, inverse_images) -> Automorphism:
    """Transport a pair of mutually inverse maps of the reduced presentation."""
    fr = w.frame
    F, P = fr.target, fr.orig
    if fr.forward.images == P.gens() and F == P:
        auto = Automorphism(P, tuple(images), tuple(inverse_images), label, tuple(params))
    else:
        fwd_F = Morphism(F, F, images)
        inv_F = Morphism(F, F, inverse_images)
        img = tuple(fr.backward(fwd_F(fr.forward(g))) for g in P.gens())
        inv = tuple(fr.backward(inv_F(fr.forward(g))) for g in P.gens())
        auto = Automorphism(P, img, inv, label, tuple(params))
    if not auto.verify():
        raise GduaError(f"internal error: {auto.describe()} failed verification")
    return auto


def _reduced_f(w: Working) -> Poly:
    return w.conf.normalized_f


def make_torus(pres: Presentation, *params, bound: int = DEFAULT_SEARCH_BOUND) -> Automorphism:
    """``h -> alpha*h``, ``x -> beta*x`` and ``y -> gamma*y`` (f = 0) or
    ``y -> beta^-1 alpha^deg(f) y`` (f != 0, ``alpha^rho = 1``)."""
    w = working(pres, bound)
    F, ft = w.F, _reduced_f(w)
    params = tuple(as_scalar(p) for p in params)
    if ft.is_zero():
        if len(params) != 3:
            raise WrongInvariantShape("f = 0: the torus has three parameters (alpha, beta, gamma)")
        a, b, c = params
        _nonzero(alpha=a, beta=b, gamma=c)
        imgs = (F.d * b, F.u * c, F.h * a)
        inv = (F.d / b, F.u / c, F.h / a)
        return _lift(w, "Torus3", params, imgs, inv)
    if len(params) != 2:
        raise WrongInvariantShape("f != 0: the torus has two parameters (alpha, beta)")
    a, b = params
    _nonzero(alpha=a, beta=b)
    rh = rho(ft)
    if a**rh != 1:
        raise ConstraintViolated(f"alpha^rho = 1 fails: alpha = {format_scalar(a)}, rho = {rh}")
    n = int(ft.degree)
    c = a**n / b
    imgs = (F.d * b, F.u * c, F.h * a)
    inv = (F.d / b, F.u / c, F.h / a)
    return _lift(w, "Torus2", params, imgs, inv)


def make_psi_plus(pres: Presentation, mu, mu_prime, nu, eta, bound: int = DEFAULT_SEARCH_BOUND) -> Automorphism:
    """``x -> mu*x``, ``y -> mu'*y``, ``h -> nu*h + eta*k^tau`` (eps = 1, f constant)."""
    w = working(pres, bound)
    F, ft = w.F, _reduced_f(w)
    if w.eps != 1:
        raise WrongInvariantShape(f"psi+ needs epsilon = 1 (epsilon = {w.eps})")
    if ft.degree > 0:
        raise WrongInvariantShape("psi+ needs f~ constant")
    mu, mu_prime, nu, eta = (as_scalar(v) for v in (mu, mu_prime, nu, eta))
    _nonzero(mu=mu, mu_prime=mu_prime, nu=nu)
    beta = ft[0]
    if beta * (mu * mu_prime - 1) != 0:
        raise ConstraintViolated("beta*(mu*mu' - 1) = 0 fails")
    kt = w.k**w.tau
    imgs = (F.d * mu, F.u * mu_prime, F.h * nu + kt * eta)
    eta_inv = -eta / ((mu * mu_prime) ** w.tau * nu)
    inv = (F.d / mu, F.u / mu_prime, F.h / nu + kt * eta_inv)
    return _lift(w, "PsiPlus", (mu, mu_prime, nu, eta), imgs, inv)


def make_psi_minus(pres: Presentation, mu, nu, bound: int = DEFAULT_SEARCH_BOUND) -> Automorphism:
    """``x -> mu*y``, ``y -> r*alpha*nu/(mu*(s-r)) x``, ``h -> nu*k`` (s = 1/r, f~ = alpha*X + beta)."""
    w = working(pres, bound)
    F, ft = w.F, _reduced_f(w)
    r, s = pres.r, pres.s
    if s * r != 1:
        raise WrongInvariantShape("psi- needs s = 1/r")
    if ft.degree != 1:
        raise WrongInvariantShape("psi- needs f~ of degree one")
    alpha, beta = ft[1], ft[0]
    mu, nu = as_scalar(mu), as_scalar(nu)
    _nonzero(mu=mu, nu=nu)
    c = r * alpha * nu / (s - r)
    if beta * (c - 1) != 0:
        raise ConstraintViolated("beta*(r*alpha*nu/(s - r) - 1) = 0 fails")
    k = w.k
    imgs = (F.u * mu, F.d * (c / mu), k * nu)
    mu2 = mu * (s - r) / (r * alpha * nu)
    nu2 = ((s - r) / (alpha * r)) ** 2 / nu
    c2 = r * alpha * nu2 / (s - r)
    inv = (F.u * mu2, F.d * (c2 / mu2), k * nu2)
    return _lift(w, "PsiMinus", (mu, nu), imgs, inv)


def normalized_psi_minus(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> Automorphism:
    w = working(pres, bound)
    ft = _reduced_f(w)
    if ft.degree != 1:
        raise WrongInvariantShape("psi- needs f~ of degree one")
    return make_psi_minus(pres, 1, (pres.s - pres.r) / (pres.r * ft[1]), bound)


def make_cyclic_phi(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> Automorphism:
    """``x -> y``, ``y -> h``, ``h -> x`` (f = 0, s = 1/r)."""
    w = working(pres, bound)
    F = w.F
    if not _reduced_f(w).is_zero() or pres.r * pres.s != 1:
        raise WrongInvariantShape("the cyclic automorphism needs f = 0 and s = 1/r")
    return _lift(w, "CyclicPhi", (), (F.u, F.h, F.d), (F.h, F.d, F.u))


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

CASE_NAMES = {
    "a": "A_TorusSemidirectZ3",
    "b": "B_KSemidirectTorus3",
    "c": "C_KSemidirectTorus2",
    "d": "D_Torus2SemidirectZ2",
    "e": "E_TorusSemidirectZ2",
    "f": "F_HOnly",
}


@dataclass
class GeneratorSchema:
    kind: str  # Torus3, Torus2, PsiPlus, PsiMinus, CyclicPhi, DownUpTorus, DownUpSwap
    params: list[str]
    constraints: list[str] = field(default_factory=list)
    fixed: dict[str, Scalar] = field(default_factory=dict)
    finite_sets: dict[str, list[Scalar]] = field(default_factory=dict)


@dataclass
class GroupDescription:
    case_tag: str
    symbolic_group: str
    tau: int
    epsilon: int
    rho: int | None
    generators: list[GeneratorSchema]
    pres: Presentation
    case_name: str = ""
    path: str | None = None
    externally_justified: bool = False
    roots: tuple[Scalar, Scalar] | None = None

    def __post_init__(self):
        if not self.case_name:
            self.case_name = CASE_NAMES.get(self.case_tag, "")


def clause_predicates(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> dict[str, bool]:
    """Clauses (a)-(e) of the classification, each evaluated directly on ``f~``; (f) is the rest."""
    w = working(pres, bound)
    ft = _reduced_f(w)
    r, s, tau = pres.r, pres.s, w.tau
    dep = tau > 0 and s**tau == r
    inverse = s * r == 1
    preds = {
        "a": ft.is_zero() and inverse,
        "b": ft.is_zero() and dep,
        "c": ft.degree == 0 and dep,
        "d": ft.degree == 1 and inverse and ft[0] == 0,
        "e": ft.degree == 1 and inverse and ft[0] != 0,
    }
    preds["f"] = not any(preds.values())
    return preds


def _allowed_alphas(pres: Presentation, rh: int) -> list[Scalar]:
    if rh == 0:
        return []
    return [z for z in roots_of_unity(pres.field) if z**rh == 1]


def _h_schema(pres: Presentation, ft: Poly) -> tuple[GeneratorSchema, int | None, str]:
    if ft.is_zero():
        return (
            GeneratorSchema("Torus3", ["alpha", "beta", "gamma"], ["alpha*beta*gamma != 0"]),
            None,
            "(K*)^3",
        )
    rh = rho(ft)
    if rh == 0:
        return GeneratorSchema("Torus2", ["alpha", "beta"], ["alpha*beta != 0"]), 0, "(K*)^2"
    schema = GeneratorSchema(
        "Torus2",
        ["alpha", "beta"],
        ["alpha*beta != 0", f"alpha^{rh} = 1"],
        finite_sets={"alpha": _allowed_alphas(pres, rh)},
    )
    return schema, rh, f"Z/{rh}Z x K*"


def classify_aut_group(pres: Presentation, bound: int = DEFAULT_SEARCH_BOUND) -> GroupDescription:
    w = working(pres, bound)
    ft = _reduced_f(w)
    preds = clause_predicates(pres, bound)
    fired = [c for c, v in preds.items() if v]
    if len(fired) != 1:
        raise GduaError(f"internal error: clauses {fired} fire simultaneously")
    case = fired[0]
    h_schema, rh, h_group = _h_schema(pres, ft)
    psi_plus = GeneratorSchema("PsiPlus", ["t"], fixed={"mu": 1, "mu_prime": 1, "nu": 1})
    if case in "de":
        nu = (pres.s - pres.r) / (pres.r * ft[1])
        psi_minus = GeneratorSchema("PsiMinus", [], fixed={"mu": 1, "nu": nu})
    gens, group = {
        "a": lambda: ([h_schema, GeneratorSchema("CyclicPhi", [])], "(K*)^3 x| Z/3Z"),
        "b": lambda: ([psi_plus, h_schema], "K x| (K*)^3"),
        "c": lambda: ([psi_plus, h_schema], "K x| (K*)^2"),
        "d": lambda: ([h_schema, psi_minus], "(K*)^2 x| Z/2Z"),
        "e": lambda: ([h_schema, psi_minus], "K* x| Z/2Z"),
        "f": lambda: ([h_schema], h_group),
    }[case]()
    return GroupDescription(case, group, w.tau, w.eps, rh, gens, pres)


def _instantiate(pres: Presentation, g: GeneratorSchema, samples: list[Scalar], bound: int):
    it = iter(samples)

    def take():
        try:
            return next(it)
        except StopIteration:
            raise InputError("not enough sample parameters") from None

    if g.kind == "Torus3":
        return [make_torus(pres, take(), take(), take(), bound=bound)]
    if g.kind == "Torus2":
        if "alpha" in g.finite_sets:
            beta = take()
            return [make_torus(pres, a, beta, bound=bound) for a in g.finite_sets["alpha"]]
        return [make_torus(pres, take(), take(), bound=bound)]
    if g.kind == "PsiPlus":
        return [make_psi_plus(pres, 1, 1, 1, take(), bound=bound)]
    if g.kind == "PsiMinus":
        return [make_psi_minus(pres, g.fixed["mu"], g.fixed["nu"], bound=bound)]
    if g.kind == "CyclicPhi":
        return [make_cyclic_phi(pres, bound=bound)]
    if g.kind == "DownUpTorus":
        if g.params == ["lambda"]:
            lam = take()
            return [make_downup_torus(pres, lam, 1 / as_scalar(lam) if lam != 0 else 0)]
        return [make_downup_torus(pres, take(), take())]
    if g.kind == "DownUpSwap":
        return [make_downup_swap(pres)]
    raise InputError(f"unknown generator kind {g.kind}")


def enumerate_generators(
    desc: GroupDescription, sample_params, bound: int = DEFAULT_SEARCH_BOUND
) -> list[Automorphism]:
    """Concrete automorphisms for each generator schema; samples are consumed in order."""
    samples = [as_scalar(x) for x in sample_params]
    out = []
    for g in desc.generators:
        n_needed = len(g.params) - (1 if "alpha" in g.finite_sets else 0)
        out.extend(_instantiate(desc.pres, g, samples[:n_needed], bound))
        samples = samples[n_needed:] + samples[:n_needed]
    return out


# ---------------------------------------------------------------------------
# down-up algebras
# ---------------------------------------------------------------------------

def quadratic_roots(alpha, beta) -> tuple[Scalar, Scalar]:
    """Roots ``(alpha +- sqrt(alpha^2 + 4 beta))/2`` of ``X^2 - alpha X - beta``."""
    alpha, beta = as_scalar(alpha), as_scalar(beta)
    if isinstance(alpha, QuadExt) or isinstance(beta, QuadExt):
        raise InputError("alpha and beta must be rational")
    root = sqrt_rational(alpha * alpha + 4 * beta)
    return (alpha + root) / 2, (alpha - root) / 2


def make_downup_torus(pres: Presentation, lam, mu) -> Automorphism:
    """``d -> lam*d``, ``u -> mu*u`` on ``L(X, r, s, gamma)``."""
    lam, mu = as_scalar(lam), as_scalar(mu)
    _nonzero(lam=lam, mu=mu)
    if pres.gamma != 0 and lam * mu != 1:
        raise ConstraintViolated("gamma != 0 forces mu = 1/lam")
    P = pres
    auto = Automorphism(
        P,
        (P.d * lam, P.u * mu, P.h * (lam * mu)),
        (P.d / lam, P.u / mu, P.h / (lam * mu)),
        "DownUpTorus",
        (lam, mu),
    )
    if not auto.verify():
        raise GduaError("internal error: torus failed verification")
    return auto


def make_downup_swap(pres: Presentation) -> Automorphism:
    """``d <-> u``; ``h = s*u*d - d*u`` goes to ``s*d*u - u*d``."""
    P = pres
    if P.r * P.s != 1:
        raise WrongInvariantShape("interchanging d and u needs beta = -1")
    h_img = P.d * P.u * P.s - P.u * P.d
    images = (P.u, P.d, h_img)
    auto = Automorphism(P, images, images, "DownUpSwap")
    if not auto.verify():
        raise GduaError("internal error: swap failed verification")
    return auto


_DOWNUP_GROUPS = {
    "a": "(K*)^2 x| Z/2Z",
    "b": "(K*)^2",
    "c": "K* x| Z/2Z",
    "d": "K*",
}

# Case letter obtained through the general classification of L(X, r, s, gamma).
_FROM_GENERAL = {("d", 0): "a", ("f", 0): "b", ("e", None): "c", ("f", 1): "d"}


def classify_downup(alpha, beta, gamma, bound: int = DEFAULT_SEARCH_BOUND) -> GroupDescription:
    alpha, beta, gamma = as_scalar(alpha), as_scalar(beta), as_scalar(gamma)
    if beta == 0:
        raise BetaZeroError("beta = 0: the down-up algebra is not Noetherian")
    r, s = quadratic_roots(alpha, beta)
    if is_root_of_unity(r):
        r, s = s, r
        if is_root_of_unity(r):
            raise BothRootsOfUnityError("both roots r and s are roots of unity")
    pres = Presentation(Poly.X(), r, s, gamma)
    case = ("a" if beta == -1 else "b") if gamma == 0 else ("c" if beta == -1 else "d")
    tau, eps, rh = 0, 0, None
    external = False
    if r != s and s != 1:
        path = "Case 1"
        general = classify_aut_group(pres, bound)
        key = (general.case_tag, None if general.case_tag == "e" else general.rho)
        if _FROM_GENERAL.get(key) != case:
            raise GduaError(f"internal error: general case {key} does not match {case}")
        tau, eps, rh = general.tau, general.epsilon, general.rho
    elif s == 1:
        path = "Case 2"
        if gamma == 0:
            general = classify_aut_group(pres, bound)
            if general.case_tag != "f" or general.rho != 0:
                raise GduaError("internal error: s = 1, gamma = 0 should give (K*)^2")
            tau, eps, rh = general.tau, general.epsilon, general.rho
        else:
            if conformal(pres).conformal:
                raise GduaError("internal error: expected a non-conformal algebra")
            external = True
    else:
        path = "Case 3"
        external = True
    if gamma == 0:
        torus = GeneratorSchema("DownUpTorus", ["lambda", "mu"], ["lambda*mu != 0"])
    else:
        torus = GeneratorSchema("DownUpTorus", ["lambda"], ["lambda != 0"], fixed={"mu": "1/lambda"})
    gens = [torus]
    if beta == -1:
        gens.append(GeneratorSchema("DownUpSwap", []))
    return GroupDescription(
        case,
        _DOWNUP_GROUPS[case],
        tau,
        eps,
        rh,
        gens,
        pres,
        case_name=f"DownUp_{case}",
        path=path,
        externally_justified=external,
        roots=(r, s),
    )


__all__ = [
    "Automorphism",
    "GeneratorSchema",
    "GroupDescription",
    "apply",
    "classify_aut_group",
    "classify_downup",
    "clause_predicates",
    "compose",
    "enumerate_generators",
    "identity",
    "invert",
    "make_cyclic_phi",
    "make_downup_swap",
    "make_downup_torus",
    "make_psi_minus",
    "make_psi_plus",
    "make_torus",
    "normalized_psi_minus",
    "power",
    "quadratic_roots",
]
