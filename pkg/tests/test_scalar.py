from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from gdua.errors import IncompatibleFieldError, InputError, RootOfUnityError, UndecidedError, ZeroInputError
from gdua.parser import parse_scalar
from gdua.scalar import (
    QuadExt,
    format_scalar,
    is_root_of_unity,
    mult_dependence,
    quad,
    root_of_unity_order,
    roots_of_unity,
    sqrt_rational,
    squarefree_part,
)

from oracles import mult_dependence_oracle

rationals = st.builds(Q, st.integers(-30, 30), st.integers(1, 12))
D_values = st.sampled_from([-3, -1, 2, 3, 5, -7])


@st.composite
def quads(draw, D=None):
    D = draw(D_values) if D is None else D
    return quad(draw(rationals), draw(rationals), D)


def test_quad_collapses_to_rational():
    assert quad(3, 0, 2) == Q(3)
    assert isinstance(quad(3, 0, 2), Q)


def test_quad_rejects_non_squarefree():
    with pytest.raises(InputError):
        quad(1, 1, 8)
    with pytest.raises(InputError):
        quad(1, 1, 1)


def test_sqrt_rational():
    assert sqrt_rational(Q(9, 4)) == Q(3, 2)
    r = sqrt_rational(8)
    assert r == quad(0, 2, 2)
    assert r * r == 8
    assert sqrt_rational(Q(-3, 4)) ** 2 == Q(-3, 4)


def test_squarefree_part():
    assert squarefree_part(72) == (6, 2)
    assert squarefree_part(-12) == (2, -3)
    with pytest.raises(ZeroInputError):
        squarefree_part(0)


def test_mixed_fields_rejected():
    with pytest.raises(IncompatibleFieldError):
        quad(0, 1, 2) + quad(0, 1, 3)


@given(quads(D=5), quads(D=5), quads(D=5))
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


@given(quads())
def test_norm_multiplicative(x):
    if isinstance(x, QuadExt):
        y = x * x.conjugate()
        assert y == x.norm()


@given(quads())
def test_format_reparses(x):
    assert parse_scalar(format_scalar(x)) == x


def test_roots_of_unity():
    assert root_of_unity_order(Q(-1)) == 2
    assert root_of_unity_order(quad(0, 1, -1)) == 4
    w = quad(Q(-1, 2), Q(1, 2), -3)
    assert root_of_unity_order(w) == 3 and w**3 == 1
    assert root_of_unity_order(-w) == 6
    assert not is_root_of_unity(quad(1, 1, 2))
    for D in (None, -1, -3, 2):
        for z in roots_of_unity(D):
            assert z ** root_of_unity_order(z) == 1
    assert len(roots_of_unity(-3)) == 6


SQ2 = quad(0, 1, 2)
PAIRS = [
    ((2, 8), (1, 3)),
    ((4, Q(1, 2)), (2, -1)),
    ((2, 3), (0, 0)),
    ((SQ2, -SQ2), (2, 2)),
]


@pytest.mark.parametrize("rs,expected", PAIRS)
def test_mult_dependence_examples(rs, expected):
    assert mult_dependence(*rs) == expected


def test_mult_dependence_preconditions():
    with pytest.raises(RootOfUnityError):
        mult_dependence(-1, 2)
    with pytest.raises(ZeroInputError):
        mult_dependence(2, 0)


def test_unit_norm_bounded_search():
    u = 1 + SQ2  # fundamental unit, norm -1
    assert mult_dependence(u, u**5) == (1, 5)
    assert mult_dependence(u**2, -(u**3)) == (2, 3)
    with pytest.raises(UndecidedError):
        mult_dependence(u, u**5, bound=4)


@given(
    st.sampled_from([2, 3, Q(1, 2), Q(4, 9), -2, 6, Q(-8, 27)]),
    st.integers(1, 4),
    st.integers(-4, 4),
    st.sampled_from([1, -1]),
)
def test_mult_dependence_matches_search(r, i, j, sign):
    r = Q(r)
    # s with s^i = (+-r^j)^... built from a random relation
    s_candidates = [sign * r**j] if i == 1 else [r**j * sign]
    for s in s_candidates:
        if s == 0:
            continue
        assert mult_dependence(r, s) == mult_dependence_oracle(r, s)
