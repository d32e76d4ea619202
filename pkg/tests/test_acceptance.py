"""The nine acceptance criteria.  Each test prints one ``ACCEPTANCE n: PASS/FAIL`` line.

Everything is exact: coefficients are rationals or elements of Q(sqrt(D)), so
equality is literal equality, with no tolerance.
"""

from __future__ import annotations

import io
import json
import random
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction as Q
from pathlib import Path


from gdua.autgroup import (
    classify_aut_group,
    classify_downup,
    compose,
    identity,
    invert,
    make_cyclic_phi,
    make_psi_minus,
    make_psi_plus,
    make_torus,
    normalized_psi_minus,
    power,
)
from gdua.cli import main
from gdua.core import check_morphism
from gdua.errors import NotNoetherianError
from gdua.invariants import center, central_scan, classify_normal, conformal, is_normal, working, xn_conditions
from gdua.parser import parse_element
from gdua.poly import Poly
from gdua.scalar import mult_dependence, quad
from gdua.search import negative_search

from cli_cases import CASES, X23
from conftest import GRID, SQRT2, L, X, random_element, record
from corpus import EXPRESSIONS
from oracles import brute_commutes, conformal_oracle, mult_dependence_oracle
from test_autgroup import stated_clauses
from test_invariants import _normal_family, _perturbations, scalar_multiple


def _check(n: int, failures: list[str], detail: str) -> None:
    ok = not failures
    record(n, ok, detail if ok else "; ".join(failures[:5]))
    assert ok, failures


# 1 ---------------------------------------------------------------------------

def test_1_rewriting_soundness():
    failures = []
    rng = random.Random(1)
    for name, P in GRID.items():
        for _ in range(100):
            x, y, z = (random_element(P, rng) for _ in range(3))
            if (x * y) * z != x * (y * z):
                failures.append(f"associativity fails on {name}")
                break
            if P.r * P.s != 0 and x and y and (x * y).is_zero():
                failures.append(f"zero divisor on {name}")
                break
    _check(1, failures, f"{len(GRID)} presentations x 100 triples")


# 2 ---------------------------------------------------------------------------

def test_2_conformality_oracle():
    failures = []
    checked = 0
    for name, P in GRID.items():
        if P.r * P.s == 0:
            try:
                conformal(P)
                failures.append(f"{name}: rs = 0 accepted")
            except NotNoetherianError:
                pass
            continue
        c = conformal(P)
        checked += 1
        if c.conformal != conformal_oracle(P.f.coeffs, P.r, P.s, P.gamma):
            failures.append(f"{name}: verdict disagrees with the oracle")
            continue
        if not c.conformal:
            continue
        g = c.g_original
        if g * P.s - g.affine_compose(P.r, -P.gamma) != P.f:
            failures.append(f"{name}: g does not solve the equation")
        if P.r != 1 or P.gamma == 0:
            # gamma = 0 frame: s*g(X) - g(rX) = f~ and supp g = supp f~
            ft, gt = c.normalized_f, c.g
            if gt * P.s - gt.scale_argument(P.r) - ft != Poly() or gt.support() != ft.support():
                failures.append(f"{name}: reduced identity or support fails")
        else:
            # r = 1, gamma != 0: no gamma = 0 frame exists; the identity keeps gamma
            if c.g * P.s - c.g.affine_compose(1, -P.gamma) != P.f:
                failures.append(f"{name}: r = 1 identity fails")
    if conformal(L(X + 1, 2, 1)).conformal:
        failures.append("L(X+1,2,1,0) reported conformal")
    c = conformal(L(X, 1, 1, 1))
    if not c.conformal or c.g != (X**2 + X) / 2:
        failures.append("g for L(X,1,1,1) is not (X^2+X)/2")
    _check(2, failures, f"{checked} grid presentations + 2 explicit instances")


# 3 ---------------------------------------------------------------------------

U = 1 + SQRT2
PAIRS = [
    (Q(2), Q(8)), (Q(4), Q(1, 2)), (Q(2), Q(3)), (SQRT2, -SQRT2),
    (Q(3), Q(1, 9)), (Q(-2), Q(4)), (Q(-2), Q(-8)), (Q(6), Q(36, 1)),
    (Q(2, 3), Q(9, 4)), (Q(2, 3), Q(4, 9)), (Q(5), Q(7)), (Q(4), Q(-8)),
    (Q(9), Q(27)), (Q(1, 4), Q(-32)), (U, U**3), (U, -U), (U**2, U**-3),
    (SQRT2, Q(2)), (quad(1, 1, -1), Q(-4)), (Q(12), Q(18)),
]
CENTER_CASES = [
    L(0, 4, Q(1, 2)), L(0, 2, Q(1, 2)), L(X, 2, Q(1, 2)), L(X, 2, 3), L(X, 2, 4),
    L(0, 2, Q(1, 4), 1), L(X**2, SQRT2, -2), L(0, 8, Q(1, 4)),
]


def test_3_tau_epsilon_center():
    failures = []
    for r, s in PAIRS:
        got, want = mult_dependence(r, s), mult_dependence_oracle(r, s)
        if got != want:
            failures.append(f"mult_dependence({r}, {s}) = {got}, search gives {want}")
    for P in CENTER_CASES:
        c = center(P)
        if c.generator is not None and not brute_commutes(P, c.generator):
            failures.append(f"{P}: generator is not central")
        w = working(P)
        for p in central_scan(P, 4):
            if not brute_commutes(w.F, w.hk_element(p)):
                failures.append(f"{P}: scan returned a non-central element")
            for (i, j) in p.terms:
                inside = (i, j) == (0, 0) if c.generator is None else (
                    j % c.tau == 0 and i == -c.epsilon * (j // c.tau)
                )
                if not inside:
                    failures.append(f"{P}: central h^{i} k^{j} outside the reported center")
    _check(3, failures, f"{len(PAIRS)} scalar pairs, {len(CENTER_CASES)} centers")


# 4 ---------------------------------------------------------------------------

NORMAL_CASES = [L(0, 4, Q(1, 2)), L(X, 2, 4), L(0, 2, 3), L(X, 2, 3, 1), L(5 * X**2, 2, -4)]
XN_GRID = [
    L(5 * X**2, 2, -4), L(3 * X, 2, -2), L(X, 3, -3), L(X**2, SQRT2, -2), L(0, 2, 3),
    L(X, 2, 3), L(X, 2, 4), L(X, 2, 3, 3), L(X + 1, 2, Q(1, 2)), L(3 * X, 2, -2, 1),
]


def test_4_normality():
    failures = []
    n_family = 0
    for P in NORMAL_CASES:
        for t in _normal_family(P):
            n_family += 1
            res = is_normal(P, t)
            if not res or t * P.d != P.d * t * res.lam or t * P.u != P.u * t * res.mu:
                failures.append(f"{P}: {t} not confirmed normal")
            else:
                classify_normal(P, t)
    rng = random.Random(11)
    bad = []
    for P in NORMAL_CASES:
        bad += [(P, x) for x in _perturbations(P, rng)]
    bad = rng.sample(bad, 20)
    for P, x in bad:
        res = is_normal(P, x)
        oracle_normal = scalar_multiple(x * P.d, P.d * x) is not None and scalar_multiple(
            x * P.u, P.u * x
        ) is not None
        if res.normal or oracle_normal or res.witness is None or res.witness.is_zero():
            failures.append(f"{P}: {x} not rejected with a witness")
    for P in XN_GRID:
        for n in (1, 2, 3, 4):
            conds = xn_conditions(P, n)
            if len(set(conds.values())) != 1:
                failures.append(f"{P}, n = {n}: conditions disagree {conds}")
    _check(4, failures, f"{n_family} normal elements, {len(bad)} non-examples, {len(XN_GRID)}x4 x^n checks")


# 5 ---------------------------------------------------------------------------

def _nonzero(rng, n):
    out = []
    while len(out) < n:
        q = Q(rng.randint(-9, 9), rng.randint(1, 4))
        if q:
            out.append(q)
    return out


def test_5_automorphisms():
    failures = []
    rng = random.Random(5)
    makers = [
        ("torus3", L(0, 2, 3, 1), lambda P, p: make_torus(P, *p[:3])),
        ("torus2", L(X, 2, 3), lambda P, p: make_torus(P, *p[:2])),
        ("psi+", L(0, 4, 2), lambda P, p: make_psi_plus(P, *p)),
        ("psi-", L(X, 2, Q(1, 2)), lambda P, p: make_psi_minus(P, *p[:2])),
        ("cyclic", L(0, 2, Q(1, 2)), lambda P, p: make_cyclic_phi(P)),
    ]
    for name, P, make in makers:
        for _ in range(10):
            a = make(P, _nonzero(rng, 4))
            if not (check_morphism(P, P, a.images) and compose(a, invert(a)) == identity(P)
                    and compose(invert(a), a) == identity(P)):
                failures.append(f"{name} failed at {a.describe()}")
    P = L(0, 2, Q(1, 2))
    phi = make_cyclic_phi(P)
    if power(phi, 3) != identity(P):
        failures.append("phi^3 != id")
    l1, l2, l3 = _nonzero(rng, 3)
    if compose(compose(phi, make_torus(P, l1, l2, l3)), invert(phi)) != make_torus(P, l3, l1, l2):
        failures.append("cyclic conjugation of the torus")
    P = L(0, 4, 2)  # tau = 2
    t1, t2 = Q(3, 2), Q(-5, 7)
    if compose(make_psi_plus(P, 1, 1, 1, t1), make_psi_plus(P, 1, 1, 1, t2)) != make_psi_plus(P, 1, 1, 1, t1 + t2):
        failures.append("psi+ additivity")
    tor = make_torus(P, l1, l2, l3)
    if compose(compose(tor, make_psi_plus(P, 1, 1, 1, t1)), invert(tor)) != make_psi_plus(
        P, 1, 1, 1, t1 * (l2 * l3) ** 2 / l1
    ):
        failures.append("torus conjugation of psi+ (f = 0)")
    P = L(1, 4, 2)
    tor = make_torus(P, l1, l2)
    if compose(compose(tor, make_psi_plus(P, 1, 1, 1, t1)), invert(tor)) != make_psi_plus(P, 1, 1, 1, t1 / l1):
        failures.append("torus conjugation of psi+ (deg f = 0)")
    P = L(X, 2, Q(1, 2))
    psi = normalized_psi_minus(P)
    if power(psi, 2) != identity(P):
        failures.append("normalized psi-^2 != id")
    if compose(compose(psi, make_torus(P, l1, l2)), invert(psi)) != make_torus(P, l1, l1 / l2):
        failures.append("psi- conjugation of the torus")
    _check(5, failures, "5 constructors x 10 points, 6 group laws")


# 6 ---------------------------------------------------------------------------

def test_6_classification_truth_table():
    failures = []
    table = [
        (L(0, 2, Q(1, 2)), "a"), (L(0, 4, 2), "b"), (L(1, 4, 2), "c"),
        (L(X, 2, Q(1, 2)), "d"), (L(X + 1, 2, Q(1, 2)), "e"), (L(X, 2, 3), "f"),
    ]
    for P, case in table:
        fired = [k for k, v in stated_clauses(P).items() if v]
        got = classify_aut_group(P).case_tag
        if fired != [case] or got != case:
            failures.append(f"{P}: clauses {fired}, classifier {got}, expected {case}")
    downup = [((Q(5, 2), -1, 0), "a"), ((0, 2, 0), "b"), ((Q(5, 2), -1, 1), "c"), ((3, -2, 1), "d")]
    for (a, b, g), case in downup:
        clauses = {"a": g == 0 and b == -1, "b": g == 0 and b != -1, "c": g != 0 and b == -1,
                   "d": g != 0 and b != -1}
        fired = [k for k, v in clauses.items() if v]
        got = classify_downup(a, b, g).case_tag
        if fired != [case] or got != case:
            failures.append(f"A({a},{b},{g}): clauses {fired}, classifier {got}, expected {case}")
    _check(6, failures, "6 generalized + 4 down-up algebras")


# 7 ---------------------------------------------------------------------------

def test_7_negative_search():
    failures = []
    counts = []
    for P in (L(X, 2, 3), L(0, 2, Q(1, 2))):
        rep = negative_search(P, max_degree=3)
        counts.append(f"{P}: {rep.shapes_tried} shapes, {len(rep.solutions)} endomorphisms")
        for s in rep.outside_family:
            failures.append(f"{P}: automorphism outside the family {s.shape}")
    _check(7, failures, "; ".join(counts))


# 8 ---------------------------------------------------------------------------

def test_8_non_scalar_unit():
    P = L(1, 0, 1, 1)
    x = parse_element("1+u+u*h", P)
    y = parse_element("1-u-u*h", P)
    ok = x * y == P.one() and not x.constant_value()
    record(8, ok, "mul(1+u+u*h, 1-u-u*h) = 1 in L(1, 0, 1, 1)")
    assert ok


# 9 ---------------------------------------------------------------------------

GOLDEN = Path(__file__).parent / "golden"


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_9_cli_contract():
    failures = []
    codes = set()
    for name, argv, code in CASES:
        got, out, err = _run(argv)
        codes.add(got)
        text = out if out else f"[stderr] {err}"
        if got != code:
            failures.append(f"{name}: exit {got}, expected {code}")
        if text != (GOLDEN / f"{name}.txt").read_text():
            failures.append(f"{name}: output differs from golden file")
        if "--json" in argv:
            try:
                json.loads(out)
            except ValueError:
                failures.append(f"{name}: invalid JSON")
    if not {1, 2, 3} <= codes:
        failures.append(f"exit codes exercised: {sorted(codes)}")
    got, out, _ = _run(["downup", "5/2", "-1", "0", "--json"])
    data = json.loads(out)
    if data.get("case") != "a" or data.get("group") != "(K*)^2 x| Z/2Z":
        failures.append("downup 5/2 -1 0 --json")
    P = L(X, 2, 3)
    for text in EXPRESSIONS:
        _, out, _ = _run(["nf", text, "--preset", X23])
        if parse_element(out.strip(), P) != parse_element(text, P):
            failures.append(f"round trip fails on {text!r}")
    _check(9, failures, f"{len(CASES)} golden invocations, exit codes {sorted(codes)}, {len(EXPRESSIONS)} round trips")
