"""Exact computation in generalized down-up algebras ``L(f, r, s, gamma)``."""

from .core import Element, Presentation
from .poly import Poly

__all__ = ["Element", "Poly", "Presentation"]
__version__ = "0.1.0"
