"""Alexander duality for radical well-mixed monomial ideals.

Duality is taken with respect to a point a, a character vector with no
absent entries. The dual of I inside the box named by a intersects one
irreducible component per minimized generator degree vector, complementing
each entry within the box. Equivalently the dual is generated by one
pattern monomial per component of the standard decomposition of I; both
routes are implemented and cross-checked in the tests.

A point properly dominates an ideal when every minimized generator degree
vector is entrywise defined and at most the point. Dual components may
escape the box (an entry can exceed its slot by one), so the second dual is
taken with the domination check relaxed; the involution then lands back on
the original ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .monomials import CharVector, char_leq, pattern_monomial, validate_char_vector
from .ideals import ClosureKind, IdealPresentation, reduce_generators
from .decompose import (
    Decomposition,
    absorb_components,
    standard_prime_decomposition,
)


@dataclass(frozen=True)
class DualityContext:
    """A radical well-mixed ideal together with an admissible point."""

    ideal: IdealPresentation
    point: CharVector


def char_vectors(ideal: IdealPresentation) -> list[CharVector]:
    """Degree vectors of the minimized generators."""
    return [u.deg_vector() for u in reduce_generators(ideal).gens]


def default_point(ideal: IdealPresentation) -> CharVector:
    """The entrywise maximum of the generator degree vectors.

    A variable absent from every generator gets the zero-size box 0, so the
    default is always a valid explicit point.
    """
    if ideal.kind is not ClosureKind.RADICAL_WELL_MIXED:
        raise PreconditionError("duality expects a radical_well_mixed presentation")
    if ideal.is_unit:
        raise PreconditionError("the unit ideal has no duality point")
    vectors = char_vectors(ideal)
    if not vectors:
        return (0,) * ideal.arity
    return tuple(
        max(0, max(vec[i] for vec in vectors)) for i in range(ideal.arity)
    )


def duality_context(
    ideal: IdealPresentation, point: CharVector | None = None
) -> DualityContext:
    """Validate a point against an ideal, defaulting to the tight box."""
    if ideal.kind is not ClosureKind.RADICAL_WELL_MIXED:
        raise PreconditionError("duality expects a radical_well_mixed presentation")
    if ideal.is_unit:
        raise PreconditionError("the unit ideal has no Alexander dual")
    if point is None:
        point = default_point(ideal)
    else:
        point = validate_char_vector(point, ideal.arity)
        if any(entry == -1 for entry in point):
            raise PreconditionError("a duality point has no absent entries")
        for vec in char_vectors(ideal):
            if not char_leq(vec, point):
                raise PreconditionError(
                    f"point {point} does not dominate generator degrees {vec}"
                )
    return DualityContext(ideal, point)


def a_complement(a: CharVector, b: CharVector) -> CharVector:
    """Complement b inside the box named by a, entrywise a_i + 1 - b_i."""
    out = []
    for x, y in zip(a, b):
        if y == -1:
            out.append(-1)
        else:
            if y > x + 1:
                raise PreconditionError(
                    f"entry {y} exceeds the box bound {x} + 1"
                )
            out.append(x + 1 - y)
    return tuple(out)


def _dual(ideal: IdealPresentation, point: CharVector) -> IdealPresentation:
    """Generators of the dual: one pattern monomial per component."""
    if ideal.is_unit:
        return IdealPresentation((), ClosureKind.RADICAL_WELL_MIXED, ideal.arity)
    decomp = standard_prime_decomposition(ideal)
    gens = tuple(
        pattern_monomial(a_complement(point, b)) for b in decomp.components
    )
    return reduce_generators(
        IdealPresentation(gens, ClosureKind.RADICAL_WELL_MIXED, ideal.arity)
    )


def alexander_dual(context: DualityContext) -> IdealPresentation:
    """The Alexander dual of the ideal inside the context's box."""
    return _dual(context.ideal, context.point)


def alexander_dual_decomposition(context: DualityContext) -> Decomposition:
    """The dual as an intersection: complement each generator degree vector."""
    components = [
        a_complement(context.point, vec) for vec in char_vectors(context.ideal)
    ]
    return Decomposition(
        tuple(absorb_components(components, "rwm_prime")),
        "rwm_prime",
        context.ideal.arity,
    )


def involution_check(context: DualityContext) -> bool:
    """Whether dualizing twice returns the original minimized generators."""
    first = _dual(context.ideal, context.point)
    second = _dual(first, context.point)
    return second.gens == reduce_generators(context.ideal).gens


def complementation_check(context: DualityContext, b: CharVector) -> bool:
    """Membership exchange: Y^b avoids I exactly when its complement hits the dual.

    The probe vector b ranges over the box, entrywise 0 <= b_i <= a_i + 1,
    with b_i = -1 allowed and complemented to a_i + 1.
    """
    from .ideals import member

    a = context.point
    probe = pattern_monomial(b)
    comp = tuple(
        a[i] - b[i] if b[i] >= 0 else a[i] + 1 for i in range(len(a))
    )
    if any(entry < 0 for entry in comp):
        raise PreconditionError(f"probe {b} escapes the box named by {a}")
    comp_probe = pattern_monomial(comp)
    dual = _dual(context.ideal, a)
    return member(probe, context.ideal) != member(comp_probe, dual)
