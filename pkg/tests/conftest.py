"""Shared helpers for the test suite."""

import pytest

from deltamon.exponents import ExpPoly
from deltamon.ideals import IdealPresentation, presentation
from deltamon.text import parse_kind, parse_monomial, parse_poly


def p(text: str) -> ExpPoly:
    """Exponent polynomial from text, e.g. p("x^2+2")."""
    return parse_poly(text)


def m(text: str, arity: int):
    """Monomial from text at a given arity, e.g. m("y1^{x+1}*y2", 2)."""
    return parse_monomial(text, arity)


def ideal(kind: str, arity: int, *gens: str) -> IdealPresentation:
    """Ideal presentation from monomial strings; kind aliases allowed."""
    return presentation([m(g, arity) for g in gens], parse_kind(kind), arity)


@pytest.fixture
def squares_wm():
    """The well-mixed closure of y1^2, y2^2 in two variables."""
    return ideal("wm", 2, "y1^2", "y2^2")


@pytest.fixture
def cross_rwm():
    """The radical well-mixed closure of y1^x y2, y1 y2^x."""
    return ideal("rwm", 2, "y1^{x}*y2", "y1*y2^{x}")


@pytest.fixture
def product_rwm():
    """The radical well-mixed closure of the single generator y1 y2."""
    return ideal("rwm", 2, "y1*y2")
