"""Text syntax for exponent polynomials, monomials, and ideal files.

Polynomials are sums of terms ``c``, ``x``, ``x^k``, ``c*x^k`` (whitespace
insignificant), e.g. ``x^2+2*x+3``. Monomials are products of factors
``yK``, ``yK^N``, ``yK^{poly}`` joined by ``*``, with ``1`` for the empty
product; duplicate variables have their exponents added. Rendering is
canonical and round-trips: parse(render(v)) == v.

An ideal file holds ``#`` comments, a header (``kind: <kind>`` and
``arity: <n>`` lines, in either order, before any monomial), and one
monomial per line. The kind accepts the short aliases ``wm`` and ``rwm``.

All syntax errors raise :class:`deltamon.errors.ParseError` with a 0-based
character position (for files, a line number as well).
"""

from __future__ import annotations

import re

from .errors import ParseError
from .exponents import ExpPoly
from .monomials import ExpVector
from .ideals import ClosureKind, IdealPresentation

KIND_ALIASES = {
    "wm": ClosureKind.WELL_MIXED,
    "rwm": ClosureKind.RADICAL_WELL_MIXED,
}

_NAT = re.compile(r"[0-9]+")
_INDEX = re.compile(r"[1-9][0-9]*")


class _Scanner:
    """Character cursor with whitespace skipping and positioned errors."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str, what: str) -> None:
        if not self.take(ch):
            self.fail(f"expected {what}")

    def match(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m.group()

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def fail(self, message: str):
        raise ParseError(message, self.pos)


def _parse_xfactor(s: _Scanner) -> int:
    """Consume ``x`` or ``x^k`` and return the degree."""
    s.expect("x", "a term (number or x)")
    if s.take("^"):
        return int(s.match(_NAT, "an exponent"))
    return 1


def _parse_term(s: _Scanner, coeffs: list[int]) -> None:
    """One term ``c``, ``x``, ``x^k``, or ``c*x^k`` added into coeffs."""
    if s.peek().isdigit():
        coeff = int(s.match(_NAT, "a natural number"))
        degree = _parse_xfactor(s) if s.take("*") else 0
    else:
        coeff = 1
        degree = _parse_xfactor(s)
    while len(coeffs) <= degree:
        coeffs.append(0)
    coeffs[degree] += coeff


def _parse_poly(s: _Scanner) -> ExpPoly:
    coeffs: list[int] = []
    _parse_term(s, coeffs)
    while s.take("+"):
        _parse_term(s, coeffs)
    return ExpPoly(coeffs)


def parse_poly(text: str) -> ExpPoly:
    """Parse a symbolic exponent such as ``x^2+2*x+3``."""
    s = _Scanner(text)
    p = _parse_poly(s)
    if not s.at_end():
        s.fail("unexpected trailing input")
    return p


def render_poly(p: ExpPoly) -> str:
    """Canonical text: terms by descending degree, unit coefficients omitted."""
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeff(d)
        if not c:
            continue
        if d == 0:
            parts.append(str(c))
        else:
            x = "x" if d == 1 else f"x^{d}"
            parts.append(x if c == 1 else f"{c}*{x}")
    return "+".join(parts)


def parse_monomial(text: str, arity: int) -> ExpVector:
    """Parse a monomial such as ``y1^{x^2+1}*y2^3`` against a declared arity."""
    s = _Scanner(text)
    if s.at_end():
        s.fail("empty monomial")
    if s.peek() == "1":
        s.take("1")
        if not s.at_end():
            s.fail("unexpected input after 1")
        return ExpVector.zero(arity)
    coords = [ExpPoly.ZERO] * arity
    while True:
        s.expect("y", "a variable factor yK")
        start = s.pos
        index = int(s.match(_INDEX, "a variable index"))
        if index > arity:
            raise ParseError(
                f"variable index {index} exceeds arity {arity}", start
            )
        exponent = ExpPoly.ONE
        if s.take("^"):
            if s.take("{"):
                exponent = _parse_poly(s)
                s.expect("}", "closing brace")
            else:
                exponent = ExpPoly.constant(int(s.match(_NAT, "a natural exponent")))
        coords[index - 1] = coords[index - 1].add(exponent)
        if s.at_end():
            break
        s.expect("*", "* between factors")
    return ExpVector(coords)


def render_monomial(v: ExpVector) -> str:
    """Canonical text: factors by ascending index, zero exponents dropped."""
    parts = []
    for i, p in enumerate(v.coords, start=1):
        if p.is_zero():
            continue
        if p == ExpPoly.ONE:
            parts.append(f"y{i}")
        elif p.degree == 0:
            parts.append(f"y{i}^{p.coeff(0)}")
        else:
            parts.append(f"y{i}^{{{render_poly(p)}}}")
    return "*".join(parts) if parts else "1"


def parse_kind(text: str) -> ClosureKind:
    name = text.strip()
    if name in KIND_ALIASES:
        return KIND_ALIASES[name]
    try:
        return ClosureKind(name)
    except ValueError:
        raise ParseError(f"unknown closure kind {name!r}") from None


def parse_ideal_text(text: str) -> IdealPresentation:
    """Parse the ideal file format from a string."""
    kind: ClosureKind | None = None
    arity: int | None = None
    gens: list[ExpVector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("kind:"):
                if kind is not None:
                    raise ParseError("duplicate kind header")
                kind = parse_kind(line[len("kind:"):])
            elif line.startswith("arity:"):
                if arity is not None:
                    raise ParseError("duplicate arity header")
                value = line[len("arity:"):].strip()
                if not value.isdigit() or int(value) < 1:
                    raise ParseError(f"arity must be a positive integer, got {value!r}")
                arity = int(value)
            else:
                if kind is None or arity is None:
                    raise ParseError(
                        "kind and arity headers must precede monomials"
                    )
                gens.append(parse_monomial(line, arity))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.args[0]}") from None
    if kind is None:
        raise ParseError("missing kind header")
    if arity is None:
        raise ParseError("missing arity header")
    return IdealPresentation(tuple(gens), kind, arity)


def parse_ideal_file(path: str) -> IdealPresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal_text(fh.read())


def render_ideal(ideal: IdealPresentation) -> dict:
    """JSON-ready presentation: kind, arity, generators, unit flag.

    The unit ideal renders with the single generator "1" so that the
    generator list alone always reconstructs the ideal.
    """
    gens = ["1"] if ideal.is_unit else [render_monomial(u) for u in ideal.gens]
    return {
        "kind": ideal.kind.value,
        "arity": ideal.arity,
        "generators": gens,
        "is_unit": ideal.is_unit,
    }
