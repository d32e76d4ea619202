from __future__ import annotations

from fractions import Fraction as Q

import pytest

from gdua.errors import WrongInvariantShape
from gdua.search import negative_search

from conftest import L, X


def test_search_needs_linear_shape():
    with pytest.raises(WrongInvariantShape):
        negative_search(L(X**2, 2, 3))
    with pytest.raises(WrongInvariantShape):
        negative_search(L(X, 2, 3, 1))


def test_small_search_finds_torus_only():
    rep = negative_search(L(X, 2, 3), max_degree=1)
    assert rep.ok
    assert rep.solutions
    assert all(s.family_member for s in rep.solutions if s.surjective_on_generators)


def test_cyclic_family_is_recognised():
    rep = negative_search(L(0, 2, Q(1, 2)), max_degree=1)
    assert rep.ok
    labels = {s.family_member for s in rep.solutions if s.family_member}
    assert any("CyclicPhi" in lab for lab in labels)
    # proper endomorphisms such as d -> d, u -> u, h -> u*d are seen and set aside
    rep2 = negative_search(L(0, 2, Q(1, 2)), max_degree=2)
    assert any(not s.surjective_on_generators for s in rep2.solutions)
    assert rep2.ok
