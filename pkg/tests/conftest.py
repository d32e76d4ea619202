from __future__ import annotations

import random
import sys
from fractions import Fraction as Q
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gdua.core import Presentation  # noqa: E402
from gdua.poly import Poly  # noqa: E402
from gdua.scalar import quad  # noqa: E402

X = Poly.X()
SQRT2 = quad(0, 1, 2)


def L(f, r, s, gamma=0) -> Presentation:
    if not isinstance(f, Poly):
        f = Poly([f])
    return Presentation(f, r, s, gamma)


# Twelve presentations covering every branch of the rewriting and invariant code.
GRID = {
    "X,2,3,0": L(X, 2, 3),
    "X,2,3,1": L(X, 2, 3, 1),
    "0,2,1/2,0": L(0, 2, Q(1, 2)),
    "X^2+X,3,5,0": L(X**2 + X, 3, 5),
    "X+1,2,1,0": L(X + 1, 2, 1),
    "X,1,1,1": L(X, 1, 1, 1),
    "0,4,2,0": L(0, 4, 2),
    "X,2,1/2,0": L(X, 2, Q(1, 2)),
    "X+1,2,1/2,0": L(X + 1, 2, Q(1, 2)),
    "X,1,3,2": L(X, 1, 3, 2),
    "X^2,1+sqrt2,3+2sqrt2,0": L(X**2, 1 + SQRT2, 3 + 2 * SQRT2),
    "1,0,1,1": L(1, 0, 1, 1),
}


def random_element(P: Presentation, rng: random.Random, max_degree: int = 3, n_terms: int = 3):
    """A random element with PBW monomials of total degree at most ``max_degree``."""
    x = P.zero()
    for _ in range(n_terms):
        a = rng.randint(0, max_degree)
        b = rng.randint(0, max_degree - a)
        c = rng.randint(0, max_degree - a - b)
        x = x + P.monomial(a, b, c, Q(rng.randint(-5, 5), rng.randint(1, 3)))
    return x


ACCEPTANCE: dict[int, str] = {}


def record(n: int, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    ACCEPTANCE[n] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])


@pytest.fixture
def rng():
    return random.Random(20240611)
