"""Bounded search for automorphisms outside the classified families.

Candidate images: ``d -> M1``, ``u -> P*M2`` for PBW monomials of total degree
1..``max_degree``, and ``h`` mapped to a scalar multiple of ``h^e``, ``k^e``,
``d^e``, ``u^e`` (``e <= max_degree``) or to ``c0*h + c1*k^tau``.  The
torus lets us take the coefficient of ``M1`` to be 1.  For ``gamma = 0`` and
``deg f <= 1`` the defining relations are then linear in ``(P, c)``, so each
shape is decided exactly by linear algebra.

A solution is an endomorphism.  It can only be an automorphism if it induces
a surjection on ``N/N^2``, where ``N`` is the ideal generated by
``d, u, h`` (all candidate images lie in ``N``); solutions failing this rank
test are recorded as proper endomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .autgroup import (
    Automorphism,
    GroupDescription,
    classify_aut_group,
    compose,
    identity,
    invert,
    make_cyclic_phi,
    make_psi_plus,
    make_torus,
    normalized_psi_minus,
    power,
)
from .core import Element, Presentation, check_morphism
from .errors import ConstraintViolated, GduaError, WrongInvariantShape
from .invariants import working
from .linalg import rref, solve
from .scalar import DEFAULT_SEARCH_BOUND, Scalar


@dataclass
class Solution:
    shape: tuple
    images: tuple[Element, Element, Element]
    surjective_on_generators: bool
    family_member: str | None


@dataclass
class SearchReport:
    pres: Presentation
    shapes_tried: int
    solutions: list[Solution] = field(default_factory=list)

    @property
    def outside_family(self) -> list[Solution]:
        return [s for s in self.solutions if s.surjective_on_generators and s.family_member is None]

    @property
    def ok(self) -> bool:
        return not self.outside_family


def _monomials(max_degree: int):
    for n in range(1, max_degree + 1):
        for a in range(n + 1):
            for b in range(n + 1 - a):
                yield (a, b, n - a - b)


def _h_shapes(F: Presentation, k: Element, tau: int, max_degree: int):
    shapes = []
    for name, base in (("h", F.h), ("k", k), ("d", F.d), ("u", F.u)):
        for e in range(1, max_degree + 1):
            shapes.append(((f"{name}^{e}",), (base**e,)))
    if tau > 0:
        shapes.append((("h", f"k^{tau}"), (F.h, k**tau)))
    return shapes


def _coordinates(elems: list[Element], rhs: Element | None = None):
    keys = sorted({m for e in elems for m in e.terms} | (set(rhs.terms) if rhs else set()))
    rows = [[e.coefficient(*m) for e in elems] for m in keys]
    b = [(-rhs.coefficient(*m) if rhs else Fraction(0)) for m in keys]
    return rows, b


def _generic_point(particular, kernel, nonzero_idx: list[int]):
    """A point of the affine solution space with the given coordinates nonzero."""
    n = len(particular)
    if not kernel:
        x = particular
        return x if all(x[i] != 0 for i in nonzero_idx) else None
    for i in nonzero_idx:
        if particular[i] == 0 and all(v[i] == 0 for v in kernel):
            return None
    # coordinates not identically zero: a point avoiding finitely many hyperplanes
    for trial in range(1, 50):
        ts = [Fraction(trial * (j + 2) + j * j) for j in range(len(kernel))]
        x = [particular[c] + sum(t * v[c] for t, v in zip(ts, kernel)) for c in range(n)]
        if all(x[i] != 0 for i in nonzero_idx):
            return x
    return None


def _may_be_surjective(F: Presentation, images) -> bool:
    """False when the map induced on ``N/N^2`` is not onto.

    ``N`` is a proper ideal only when ``f(0) = 0``; otherwise nothing is ruled out.
    """
    if F.f[0] != 0:
        return True
    basis = [(0, 0, 1), (1, 0, 0)]
    if F.f[1] == 0:
        basis.append((0, 1, 0))
    rows = [[img.coefficient(*m) for m in basis] for img in images]
    m, _ = rref(rows, len(basis))
    return len(m) == len(basis)


class _Family:
    """Membership in the group described by a classification (reduced frame)."""

    def __init__(self, pres: Presentation, desc: GroupDescription, bound: int):
        self.pres, self.desc, self.bound = pres, desc, bound
        w = working(pres, bound)
        self.w = w
        self.finite = [identity(pres)]
        kinds = {g.kind for g in desc.generators}
        if "CyclicPhi" in kinds:
            phi = make_cyclic_phi(pres, bound)
            phi2 = power(phi, 2)
            phi2.label = "CyclicPhi^2"
            self.finite += [phi, phi2]
        if "PsiMinus" in kinds:
            self.finite.append(normalized_psi_minus(pres, bound))

    def _connected(self, images) -> str | None:
        D, U, H = images
        P, w = self.pres, self.w
        if set(D.terms) != {(0, 0, 1)} or set(U.terms) != {(1, 0, 0)}:
            return None
        mu, mu2 = D.terms[(0, 0, 1)], U.terms[(1, 0, 0)]
        nu = H.coefficient(0, 1, 0)
        if nu == 0:
            return None
        candidates = []
        try:
            if w.conf.normalized_f.is_zero():
                candidates.append(make_torus(P, nu, mu, mu2, bound=self.bound))
            else:
                candidates.append(make_torus(P, nu, mu, bound=self.bound))
        except (ConstraintViolated, WrongInvariantShape):
            pass
        if any(g.kind == "PsiPlus" for g in self.desc.generators):
            rest = H - P.h * nu
            kt = w.k**w.tau
            if rest.is_zero():
                eta = Fraction(0)
            else:
                m = next(iter(kt.terms))
                eta = rest.coefficient(*m) / kt.terms[m]
            try:
                candidates.append(make_psi_plus(P, mu, mu2, nu, eta, self.bound))
            except (ConstraintViolated, WrongInvariantShape):
                pass
        for c in candidates:
            if c.images == tuple(images):
                return c.describe()
        return None

    def member(self, images) -> str | None:
        probe = Automorphism(self.pres, tuple(images), tuple(images))
        for fin in self.finite:
            # images of probe o fin^-1 must be a connected-part element
            rest = compose(probe, invert(fin))
            label = self._connected(rest.images)
            if label is not None:
                return label if fin.label == "Identity" else f"{label} o {fin.describe()}"
        return None


def negative_search(
    pres: Presentation, max_degree: int = 3, bound: int = DEFAULT_SEARCH_BOUND
) -> SearchReport:
    """Search image shapes of degree at most ``max_degree`` for automorphisms of ``pres``.

    ``pres`` must have ``gamma = 0`` and ``deg f <= 1``.
    """
    w = working(pres, bound)
    F = pres
    if F.gamma != 0 or F.f.degree > 1:
        raise WrongInvariantShape("the search needs gamma = 0 and deg f <= 1")
    desc = classify_aut_group(pres, bound)
    family = _Family(pres, desc, bound)
    r, s = F.r, F.s
    f0, f1 = F.f[0], F.f[1]
    monos = [F.monomial(*m) for m in _monomials(max_degree)]
    shapes = _h_shapes(F, w.k, w.tau, max_degree)
    report = SearchReport(pres, 0)

    # the first two relations only involve one of the images of d, u
    rel1 = {}
    for (i, M1), (j, (names, Ns)) in product(enumerate(monos), enumerate(shapes)):
        rel1[(i, j)] = [M1 * N - N * M1 * r for N in Ns]
    rel2 = {}
    for (i, M2), (j, (names, Ns)) in product(enumerate(monos), enumerate(shapes)):
        rel2[(i, j)] = [N * M2 - M2 * N * r for N in Ns]

    for (i1, M1), (i2, M2), (j, (names, Ns)) in product(
        enumerate(monos), enumerate(monos), enumerate(shapes)
    ):
        report.shapes_tried += 1
        m = len(Ns)
        # unknowns: P, c_1..c_m
        A = M1 * M2 - M2 * M1 * s
        cols = [A] + [N * f1 for N in Ns]
        r3, b3 = _coordinates(cols, F.scalar(f0) if f0 != 0 else None)
        r1, b1 = _coordinates([F.zero()] + rel1[(i1, j)])
        r2, b2 = _coordinates([F.zero()] + rel2[(i2, j)])
        rows, rhs = r1 + r2 + r3, b1 + b2 + b3
        sol = solve(rows, rhs, m + 1) if rows else ([Fraction(0)] * (m + 1), _unit_basis(m + 1))
        if sol is None:
            continue
        # P and the leading coefficient of the image of h must be nonzero
        x = _generic_point(sol[0], sol[1], [0, 1])
        if x is None:
            continue
        P, cs = x[0], x[1:]
        H = F.zero()
        for c, N in zip(cs, Ns):
            H = H + N * c
        images = (M1, M2 * P, H)
        if not check_morphism(F, F, images):
            raise GduaError("internal error: linear solution fails the relations")
        onto = _may_be_surjective(F, images)
        member = family.member(images) if onto else None
        report.solutions.append(
            Solution(
                (_mono_name(M1), _mono_name(M2), names),
                images,
                onto,
                member,
            )
        )
    return report


def _unit_basis(n: int) -> list[list[Scalar]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _mono_name(x: Element) -> str:
    from .core import format_monomial

    ((m, _),) = x.terms.items()
    return format_monomial(m)
