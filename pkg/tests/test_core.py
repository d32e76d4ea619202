from __future__ import annotations

import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from gdua.core import (
    BiPoly,
    apply_antiauto,
    check_morphism,
    downup_iso,
    from_gwa_view,
    gamma_reduction,
    graded_components,
    scale_h_iso,
    scale_u_iso,
    swap_roots_iso,
    to_gwa_view,
)
from gdua.errors import IncompatibleFieldError, PresentationMismatch
from gdua.scalar import quad

from conftest import GRID, L, SQRT2, X, random_element
from oracles import naive_normal_form, words

GRID_IDS = list(GRID)


def _naive(P, word):
    return naive_normal_form(word, P.f.coeffs, P.r, P.s, P.gamma)


@pytest.mark.parametrize("name", GRID_IDS)
def test_normal_form_matches_naive_rewriting(name):
    P = GRID[name]
    for w in words(5):
        assert P.normal_form(w).terms == _naive(P, w), "".join(w)


def test_documented_examples():
    P = L(X, 2, 3)
    assert str(P.d * P.u) == "3*u*d - h"
    assert P.normal_form("dud") == P.d * P.u * P.d
    Q0 = L(0, 2, 3)
    assert str(Q0.normal_form("dud")) == "3*u*d^2"
    # d*h*u with f = 0: d h u = r h d u = r s h u d = r^2 s u h d
    assert str(Q0.normal_form("dhu")) == "12*u*h*d"
    assert (Q0.h**2 - Q0.h**2).is_zero()


def test_gamma_shift_example():
    P = L(X, 2, 3, 1)
    assert str(P.h * P.u) == "2*u*h - u"


def test_unit_example():
    P = L(1, 0, 1, 1)
    d, u, h = P.gens()
    assert (1 + u + u * h) * (1 - u - u * h) == P.one()


def test_quadratic_coefficients():
    P = L(X, 2, 3)
    x = P.h * (1 + SQRT2)
    assert str(x) == "(1+1*sqrt(2))*h"
    assert x * x == P.h**2 * (3 + 2 * SQRT2)
    with pytest.raises(IncompatibleFieldError):
        P.h * (1 + SQRT2) + P.h * quad(0, 1, 3)


def test_presentation_mismatch():
    with pytest.raises(PresentationMismatch):
        L(X, 2, 3).d * L(X, 2, 5).u


def test_relations_hold_in_every_grid_point():
    for P in GRID.values():
        assert check_morphism(P, P, P.gens())


def test_pretty_printer_order():
    P = L(X, 2, 3)
    x = P.d + P.u + P.h + P.u**2 + P.one() + P.u * P.d
    assert str(x) == "u^2 + u + u*d + h + 1 + d"


def test_graded_components_sum_back():
    P = L(X, 2, 3)
    x = P.d * P.u * P.u + P.h * P.d + 4
    comps = graded_components(x)
    assert set(comps) == {1, -1, 0}
    assert sum(comps.values(), P.zero()) == x
    assert all(c.is_homogeneous() for c in comps.values())


@pytest.mark.parametrize("name", [n for n in GRID_IDS if GRID[n].noetherian])
def test_gwa_round_trip(name, rng):
    P = GRID[name]
    for _ in range(10):
        x = random_element(P, rng)
        assert from_gwa_view(to_gwa_view(P, x)) == x


def test_gwa_commutation():
    P = L(X, 2, 3)
    a = P.u * P.d
    # d * p(h, a) = sigma(p)(h, a) * d with sigma(a) = s*a - f(h)
    assert P.d * a == (a * P.s - P.h) * P.d
    assert P.d * P.h == (P.h * P.r - P.gamma) * P.d


@pytest.mark.parametrize("name", [n for n in GRID_IDS if GRID[n].gamma != 0 and GRID[n].r != 1])
def test_gamma_reduction(name):
    P = GRID[name]
    fr = gamma_reduction(P)
    assert fr.target.gamma == 0
    assert fr.forward.check() and fr.backward.check()
    for g in P.gens():
        assert fr.backward(fr.forward(g)) == g


def test_standard_isomorphisms():
    P = L(2 * X + 3, 2, 5, 1)
    for m in (scale_h_iso(P, 3), scale_u_iso(P, Q(1, 2)), downup_iso(P)):
        assert m.check(), m
    S = L(X, 2, 5, 1)
    assert swap_roots_iso(S).check()


def test_antiautomorphism():
    for P in GRID.values():
        d, u, h = P.gens()
        rng = random.Random(3)
        for _ in range(5):
            x, y = random_element(P, rng), random_element(P, rng)
            assert apply_antiauto(P, x * y) == apply_antiauto(P, y) * apply_antiauto(P, x)


def test_failed_morphism_reports_residuals():
    P = L(X, 2, 3)
    res = check_morphism(P, P, (P.u, P.d, P.h))
    assert not res
    assert set(res.residuals) == {"dh", "hu", "du"}


def test_bipoly_evaluation():
    P = L(X, 2, 3)
    p = BiPoly({(1, 0): 2, (0, 1): 1})
    assert p.format(("h", "a")) == "2*h + a"
    assert p.evaluate(P.h, P.u * P.d, P.one()) == 2 * P.h + P.u * P.d


# -- properties -------------------------------------------------------------

grid_points = st.sampled_from([GRID[n] for n in GRID_IDS])
letters = st.lists(st.sampled_from("duh"), max_size=6)


@settings(max_examples=60, deadline=None)
@given(grid_points, letters, letters)
def test_normal_form_is_multiplicative(P, w1, w2):
    assert P.normal_form(w1 + w2) == P.normal_form(w1) * P.normal_form(w2)


@settings(max_examples=40, deadline=None)
@given(grid_points, st.integers(0, 10**6))
def test_associativity(P, seed):
    rng = random.Random(seed)
    x, y, z = (random_element(P, rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([P for P in GRID.values() if P.noetherian]), st.integers(0, 10**6))
def test_no_zero_divisors(P, seed):
    rng = random.Random(seed)
    x, y = random_element(P, rng), random_element(P, rng)
    if x and y:
        assert not (x * y).is_zero()


@settings(max_examples=40, deadline=None)
@given(grid_points, st.integers(0, 10**6))
def test_distributivity(P, seed):
    rng = random.Random(seed)
    x, y, z = (random_element(P, rng) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
