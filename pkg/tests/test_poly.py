from __future__ import annotations

from fractions import Fraction as Q

from hypothesis import given, strategies as st

from gdua.parser import parse_poly
from gdua.poly import Poly, rho

X = Poly.X()
coeffs = st.lists(st.builds(Q, st.integers(-20, 20), st.integers(1, 6)), max_size=5)
polys = coeffs.map(Poly)


def test_degree_and_zero():
    assert Poly().degree == float("-inf")
    assert Poly([0, 0]).is_zero()
    assert (X**3 + 1).degree == 3


def test_evaluation_and_composition():
    p = X**2 + 2 * X + 1
    assert p(Q(3)) == 16
    assert p.compose(X - 1) == X**2
    assert p.affine_compose(2, -1)(Q(1)) == p(Q(1))
    assert p.scale_argument(2) == 4 * X**2 + 4 * X + 1


def test_rho():
    assert rho(X**5 + X**2) == 3
    assert rho(X**4 + X**2) == 2
    assert rho(X + 1) == 1
    assert rho(X) == 0
    assert rho(Poly([3])) == 0


def test_format():
    assert str(X**2 - X / 2 + 3) == "X^2 - 1/2*X + 3"
    assert str(Poly()) == "0"
    assert str(-X) == "-X"


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly()


@given(polys, polys, st.builds(Q, st.integers(-9, 9), st.integers(1, 5)))
def test_compose_is_evaluation_homomorphism(p, q, t):
    assert p.compose(q)(t) == p(q(t))


@given(polys)
def test_print_parse(p):
    assert parse_poly(str(p)) == p
