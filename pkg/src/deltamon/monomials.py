"""Exponent vectors for monomials in k{y1, ..., yn}.

A monomial prod_i yi^(u_i) is identified with its exponent vector
u in N[x]^n; the monomial 1 is the zero vector. Orders and arithmetic are
componentwise extensions of the scalar ones in :mod:`deltamon.exponents`.

Character vectors are plain int tuples with entries >= -1: entry b_i = -1
means variable i is absent, entry b_i = d >= 0 stands for the exponent x^d.
``pattern_monomial`` turns one back into an exponent vector.

Every binary operation checks that both operands share the same arity.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import ArityMismatchError, CapExceededError
from .exponents import ExpPoly

CharVector = tuple[int, ...]


class ExpVector:
    """An element of N[x]^n, immutable; arity is the tuple length."""

    __slots__ = ("coords",)

    coords: tuple[ExpPoly, ...]

    def __init__(self, coords: Iterable[ExpPoly]):
        cs = tuple(coords)
        for c in cs:
            if not isinstance(c, ExpPoly):
                raise TypeError(f"coordinates must be ExpPoly, got {c!r}")
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, name, value):
        raise AttributeError("ExpVector is immutable")

    @staticmethod
    def zero(arity: int) -> "ExpVector":
        return ExpVector((ExpPoly.ZERO,) * arity)

    @staticmethod
    def unit(arity: int, index: int, exponent: ExpPoly) -> "ExpVector":
        """The vector with ``exponent`` at 0-based ``index`` and 0 elsewhere."""
        coords = [ExpPoly.ZERO] * arity
        coords[index] = exponent
        return ExpVector(coords)

    # -- structure --------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def deg_vector(self) -> CharVector:
        """Per-coordinate degree, -1 on zero coordinates."""
        return tuple(c.degree for c in self.coords)

    def support_pattern(self) -> tuple[int, ...]:
        """1 where the coordinate is nonzero, else 0."""
        return tuple(0 if c.is_zero() else 1 for c in self.coords)

    def indicator(self) -> "ExpVector":
        """Coefficients clamped to 1: the same degree supports, all weights 1."""
        return ExpVector(
            ExpPoly(tuple(1 if c else 0 for c in p.coeffs)) for p in self.coords
        )

    def _check_arity(self, other: "ExpVector") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(
                f"arity mismatch: {self.arity} vs {other.arity}"
            )

    # -- arithmetic -------------------------------------------------------

    def add(self, other: "ExpVector") -> "ExpVector":
        self._check_arity(other)
        return ExpVector(a.add(b) for a, b in zip(self.coords, other.coords))

    def shift(self, i: int = 1) -> "ExpVector":
        return ExpVector(c.shift(i) for c in self.coords)

    def scale(self, m: int) -> "ExpVector":
        return ExpVector(c.scale(m) for c in self.coords)

    # -- orders -----------------------------------------------------------

    def leq(self, other: "ExpVector") -> bool:
        """Coefficientwise in every coordinate (u + t = v for some t)."""
        self._check_arity(other)
        return all(a.leq(b) for a, b in zip(self.coords, other.coords))

    def precedes(self, other: "ExpVector") -> bool:
        """The suffix-sum partial order, componentwise."""
        self._check_arity(other)
        return all(a.precedes(b) for a, b in zip(self.coords, other.coords))

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExpVector) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "ExpVector") -> bool:
        self._check_arity(other)
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"ExpVector({list(self.coords)!r})"


def divides_shifted(u: ExpVector, v: ExpVector) -> int | None:
    """Least i >= 0 with shift(u, i) <= v coefficientwise, or None.

    This is divisibility of monomials inside the Delta-ideal [Y^u]:
    Y^v is a multiple of some sigma^i(Y^u) iff x^i u + t = v.

    Only shifts up to min over nonzero coordinates of deg(v_j) - deg(u_j)
    can fit, since shifting raises every nonzero coordinate's degree.
    """
    u._check_arity(v)
    if u.is_zero():
        return 0
    bound: int | None = None
    for a, b in zip(u.coords, v.coords):
        if a.is_zero():
            continue
        d = b.degree - a.degree
        if d < 0:
            return None
        bound = d if bound is None else min(bound, d)
    assert bound is not None
    for i in range(bound + 1):
        if u.shift(i).leq(v):
            return i
    return None


def minimal_elements(
    vectors: Iterable[ExpVector],
    dominates: Callable[[ExpVector, ExpVector], bool] | None = None,
) -> list[ExpVector]:
    """The elements not dominated by another, sorted canonically.

    ``dominates(a, b)`` means a makes b redundant; the default is the
    ``precedes`` partial order. Duplicates collapse first, and processing
    runs from the canonically largest down so that when two distinct
    elements dominate each other (possible for preorders such as the
    radical divisibility relation) the canonically smallest survives.
    """
    if dominates is None:
        dominates = ExpVector.precedes
    items = sorted(set(vectors), key=ExpVector.sort_key, reverse=True)
    kept: list[ExpVector] = []
    for i, v in enumerate(items):
        rest = kept + items[i + 1:]
        if not any(dominates(w, v) for w in rest):
            kept.append(v)
    kept.sort(key=ExpVector.sort_key)
    return kept


def splits(u: ExpVector, cap: int = 100_000) -> list[tuple[ExpVector, ExpVector]]:
    """All ordered pairs (p, q) with p + q = u.

    There are prod (c + 1) of them over every coefficient c appearing in u;
    raises CapExceededError beyond ``cap``.
    """
    count = 1
    for poly in u.coords:
        for c in poly.coeffs:
            count *= c + 1
            if count > cap:
                raise CapExceededError(
                    f"{count}+ splits exceed the cap of {cap}"
                )
    pairs = [([], [])]
    for poly in u.coords:
        new = []
        for p_coords, q_coords in pairs:
            choices = [([], [])]
            for c in poly.coeffs:
                choices = [
                    (pc + [a], qc + [c - a])
                    for pc, qc in choices
                    for a in range(c + 1)
                ]
            for pc, qc in choices:
                new.append((p_coords + [ExpPoly(pc)], q_coords + [ExpPoly(qc)]))
        pairs = new
    return [(ExpVector(p), ExpVector(q)) for p, q in pairs]


# -- character vectors ------------------------------------------------------


def validate_char_vector(b: Sequence[int], arity: int) -> CharVector:
    b = tuple(b)
    if len(b) != arity:
        raise ArityMismatchError(f"arity mismatch: {len(b)} vs {arity}")
    for entry in b:
        if not isinstance(entry, int) or isinstance(entry, bool) or entry < -1:
            raise ValueError(f"character vector entries must be ints >= -1, got {entry!r}")
    return b


def pattern_monomial(b: Sequence[int]) -> ExpVector:
    """The monomial prod yi^(x^{b_i}) with x^-1 read as 0 (variable absent)."""
    return ExpVector(
        ExpPoly.ZERO if entry == -1 else ExpPoly.x_power(entry) for entry in b
    )


def char_leq(a: CharVector, b: CharVector) -> bool:
    """Entrywise <= with -1 below everything.

    For pattern monomials this is exactly the radical-well-mixed divisibility
    order on their degree vectors.
    """
    return all(x == -1 or (y != -1 and x <= y) for x, y in zip(a, b))
