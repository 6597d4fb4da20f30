"""Arithmetic and orders for symbolic exponents.

An exponent is a polynomial f in N[x]. Applied to a ring element a under an
endomorphism sigma it means prod_i sigma^i(a)^{f_i}, so exponents add when
powers multiply, multiplication by x is one application of sigma, and
polynomial product is composition of powers: a^(f+g) = a^f * a^g and
a^(f*g) = (a^f)^g.

Representation: a tuple of nonnegative ints, constant coefficient first,
trailing zeros trimmed. The zero polynomial is the empty tuple, its degree
is -1. Coefficients are exact unbounded Python ints, so there is no overflow
to detect.

Two orders are used throughout:

* ``cmp_total`` is the total order comparing coefficient vectors from the
  highest index down (pad to a common length first). It extends to vectors
  lexicographically and is what every emitted set is sorted by.
* ``precedes`` is the partial order f <= g requiring every suffix sum
  sum(f[i:]) to be bounded by the matching suffix sum of g. It is the order
  that decides membership in well-mixed closures.

Both orders are compatible with addition and with shifting by x.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class ExpPoly:
    """A polynomial in N[x], immutable and canonical."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"coefficients must be nonnegative ints, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def constant(c: int) -> "ExpPoly":
        return ExpPoly((c,))

    @staticmethod
    def x_power(k: int, coeff: int = 1) -> "ExpPoly":
        """The monomial coeff * x^k."""
        if k < 0:
            raise ValueError("exponent of x must be nonnegative")
        return ExpPoly((0,) * k + (coeff,))

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def total(self) -> int:
        """Sum of the coefficients, |f|."""
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def support(self) -> tuple[int, ...]:
        """Degrees with a nonzero coefficient, ascending."""
        return tuple(d for d, c in enumerate(self.coeffs) if c)

    def order(self) -> int:
        """Lowest degree with a nonzero coefficient; -1 for zero."""
        for d, c in enumerate(self.coeffs):
            if c:
                return d
        return -1

    # -- arithmetic -----------------------------------------------------

    def add(self, other: "ExpPoly") -> "ExpPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExpPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def shift(self, i: int = 1) -> "ExpPoly":
        """Multiply by x^i (apply sigma i times)."""
        if i < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero() or i == 0:
            return self
        return ExpPoly((0,) * i + self.coeffs)

    def shift_down(self, i: int) -> "ExpPoly | None":
        """Exact division by x^i, or None when some low coefficient is nonzero."""
        if i == 0 or self.is_zero():
            return self
        if any(self.coeffs[:i]):
            return None
        return ExpPoly(self.coeffs[i:])

    def scale(self, m: int) -> "ExpPoly":
        if m < 0:
            raise ValueError("scale factor must be nonnegative")
        if m == 0:
            return ExpPoly()
        return ExpPoly(tuple(m * c for c in self.coeffs))

    def mul(self, other: "ExpPoly") -> "ExpPoly":
        if self.is_zero() or other.is_zero():
            return ExpPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExpPoly(out)

    # -- orders ----------------------------------------------------------

    def cmp_total(self, other: "ExpPoly") -> int:
        """-1, 0, or 1: compare coefficient vectors from the highest index down."""
        a, b = self.coeffs, other.coeffs
        if len(a) != len(b):
            # Canonical forms: the longer one has a positive leading coefficient.
            return -1 if len(a) < len(b) else 1
        if a == b:
            return 0
        return -1 if a[::-1] < b[::-1] else 1

    def precedes(self, other: "ExpPoly") -> bool:
        """f precedes g iff every suffix sum of f is <= that suffix of g."""
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        sa = sb = 0
        for i in range(k - 1, -1, -1):
            sa += a[i] if i < len(a) else 0
            sb += b[i] if i < len(b) else 0
            if sa > sb:
                return False
        return True

    def leq(self, other: "ExpPoly") -> bool:
        """Coefficientwise comparison (f + t = g for some t in N[x])."""
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            return False
        return all(x <= y for x, y in zip(a, b))

    def suffix_sums(self) -> tuple[int, ...]:
        """sum(f[i:]) for each i, constant-index first; empty for zero."""
        out = []
        s = 0
        for c in reversed(self.coeffs):
            s += c
            out.append(s)
        return tuple(reversed(out))

    def sort_key(self):
        # Same length means same degree in canonical form, so reversed-tuple
        # comparison under equal lengths is exactly cmp_total.
        return (len(self.coeffs), self.coeffs[::-1])

    # -- dunder sugar -----------------------------------------------------

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        return self.add(other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ExpPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: "ExpPoly") -> bool:
        return self.cmp_total(other) < 0

    def __le__(self, other: "ExpPoly") -> bool:
        return self.cmp_total(other) <= 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"ExpPoly({list(self.coeffs)!r})"


ExpPoly.ZERO = ExpPoly()
ExpPoly.ONE = ExpPoly((1,))
ExpPoly.X = ExpPoly((0, 1))
