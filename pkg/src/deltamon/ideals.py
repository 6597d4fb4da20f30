"""Monomial difference ideals presented by generators under a closure kind.

A presentation is a finite set of nonzero exponent vectors plus a tag saying
which closure of the generated Delta-ideal is meant: the plain Delta-ideal
[S], its radical, its reflexive closure, its perfect closure, the well-mixed
closure, or the radical well-mixed closure. Membership of a monomial is
decided against the tagged closure.

Every kind admits a single-generator divisibility test, so ``member`` is
"some generator dominates the candidate" with a kind-specific relation:

==================  =========================================================
delta               some shift of a generator divides the monomial
radical             some shift of a generator has its degree supports
                    contained in the monomial's coordinatewise
reflexive           a generator fits after shifting either side
perfect             a generator's variable-support pattern is contained
well_mixed          a generator precedes the monomial in suffix-sum order
radical_well_mixed  a generator's degree vector is dominated entrywise
==================  =========================================================

The well-mixed and radical-well-mixed relations are cross-validated against
the exhaustive closure oracle in :mod:`deltamon.oracle`; the other three are
validated against bounded witness searches there.

A generating set containing the monomial 1 (the zero vector) collapses to
the unit ideal, carried as an ``is_unit`` flag with an empty generator
tuple. An empty generator tuple otherwise presents the zero ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .errors import ArityMismatchError, KindMismatchError, PreconditionError
from .exponents import ExpPoly
from .monomials import (
    CharVector,
    ExpVector,
    char_leq,
    divides_shifted,
    minimal_elements,
    pattern_monomial,
)


class ClosureKind(str, Enum):
    DELTA = "delta"
    RADICAL = "radical"
    REFLEXIVE = "reflexive"
    PERFECT = "perfect"
    WELL_MIXED = "well_mixed"
    RADICAL_WELL_MIXED = "radical_well_mixed"


@dataclass(frozen=True)
class IdealPresentation:
    """Canonical generator presentation: sorted, deduplicated, arity-checked."""

    gens: tuple[ExpVector, ...]
    kind: ClosureKind
    arity: int
    is_unit: bool = False

    def __post_init__(self):
        kind = ClosureKind(self.kind)
        gens = []
        unit = bool(self.is_unit)
        for g in self.gens:
            if g.arity != self.arity:
                raise ArityMismatchError(
                    f"generator arity {g.arity} does not match ideal arity {self.arity}"
                )
            if g.is_zero():
                unit = True
            else:
                gens.append(g)
        if unit:
            gens = []
        gens = sorted(set(gens), key=ExpVector.sort_key)
        object.__setattr__(self, "gens", tuple(gens))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "is_unit", unit)

    def is_zero(self) -> bool:
        return not self.gens and not self.is_unit

    def with_kind(self, kind: ClosureKind) -> "IdealPresentation":
        return IdealPresentation(self.gens, ClosureKind(kind), self.arity, self.is_unit)


def presentation(
    gens: Iterable[ExpVector], kind: ClosureKind | str, arity: int
) -> IdealPresentation:
    return IdealPresentation(tuple(gens), ClosureKind(kind), arity)


# -- kind-specific domination relations --------------------------------------


def _support_masks(u: ExpVector) -> tuple[int, ...]:
    return tuple(sum(1 << d for d in c.support()) for c in u.coords)


def _radical_dominates(u: ExpVector, v: ExpVector) -> bool:
    # v lies in the radical of [u] iff m*v is a shifted multiple of u for
    # some m >= 1, which holds iff the degree supports of some shift of u
    # are contained in v's coordinatewise (take m = the largest coefficient
    # of u; conversely coefficients scale but supports do not move).
    if u.is_zero():
        return True
    bound: int | None = None
    for a, b in zip(u.coords, v.coords):
        if a.is_zero():
            continue
        d = b.degree - a.degree
        if d < 0:
            return False
        bound = d if bound is None else min(bound, d)
    assert bound is not None
    u_masks = _support_masks(u)
    v_masks = _support_masks(v)
    for i in range(bound + 1):
        if all((um << i) & ~vm == 0 for um, vm in zip(u_masks, v_masks)):
            return True
    return False


def _reflexive_dominates(u: ExpVector, v: ExpVector) -> bool:
    # v lies in [u]* iff x^m v is a shifted multiple of u for some m >= 0,
    # i.e. x^m v >= x^i u; cancelling common shifts leaves either
    # shift(u, j) <= v (j = i - m >= 0, j bounded by v's degrees) or
    # u <= shift(v, -j) (j < 0; then x^{-j} must divide every nonzero
    # coordinate of u, so -j is bounded by u's degrees).
    if u.is_zero():
        return True
    up = max(c.degree for c in v.coords)
    down = max(c.degree for c in u.coords)
    for j in range(up + 1):
        if u.shift(j).leq(v):
            return True
    for m in range(1, down + 1):
        if u.leq(v.shift(m)):
            return True
    return False


def _perfect_dominates(u: ExpVector, v: ExpVector) -> bool:
    # v lies in {u} iff g*v is a shifted multiple of u for some nonzero
    # g in N[x], which holds iff u's variable support is contained in v's:
    # a g with a long all-ones coefficient window realizes any
    # support-compatible target.
    return all(
        a <= b for a, b in zip(u.support_pattern(), v.support_pattern())
    )


def _wm_dominates(u: ExpVector, v: ExpVector) -> bool:
    return u.precedes(v)


def _rwm_dominates(u: ExpVector, v: ExpVector) -> bool:
    return char_leq(u.deg_vector(), v.deg_vector())


def _delta_dominates(u: ExpVector, v: ExpVector) -> bool:
    return divides_shifted(u, v) is not None


_DOMINATES: dict[ClosureKind, Callable[[ExpVector, ExpVector], bool]] = {
    ClosureKind.DELTA: _delta_dominates,
    ClosureKind.RADICAL: _radical_dominates,
    ClosureKind.REFLEXIVE: _reflexive_dominates,
    ClosureKind.PERFECT: _perfect_dominates,
    ClosureKind.WELL_MIXED: _wm_dominates,
    ClosureKind.RADICAL_WELL_MIXED: _rwm_dominates,
}


def dominates(kind: ClosureKind, u: ExpVector, v: ExpVector) -> bool:
    """Whether generator u alone puts Y^v inside the kind-closure of [Y^u]."""
    return _DOMINATES[ClosureKind(kind)](u, v)


def member(v: ExpVector, ideal: IdealPresentation) -> bool:
    """Whether the monomial Y^v lies in the presented closure."""
    if v.arity != ideal.arity:
        raise ArityMismatchError(
            f"monomial arity {v.arity} does not match ideal arity {ideal.arity}"
        )
    if ideal.is_unit:
        return True
    rel = _DOMINATES[ideal.kind]
    return any(rel(u, v) for u in ideal.gens)


# -- presentations ------------------------------------------------------------


def _project(kind: ClosureKind, u: ExpVector) -> ExpVector:
    """Canonical representative of u inside its kind-closure equivalence."""
    if kind is ClosureKind.RADICAL_WELL_MIXED:
        return pattern_monomial(u.deg_vector())
    if kind is ClosureKind.PERFECT:
        return pattern_monomial(tuple(s - 1 for s in u.support_pattern()))
    return u


def reduce_generators(ideal: IdealPresentation) -> IdealPresentation:
    """Smallest sub/projected presentation with the identical member function.

    Degenerate generators collapse first (degree vectors for the radical
    well-mixed kind, support patterns for the perfect kind), then any
    generator dominated by another is dropped.
    """
    if ideal.is_unit or not ideal.gens:
        return ideal
    rel = _DOMINATES[ideal.kind]
    projected = [_project(ideal.kind, u) for u in ideal.gens]
    kept = minimal_elements(projected, rel)
    return IdealPresentation(tuple(kept), ideal.kind, ideal.arity)


def _check_binary(a: IdealPresentation, b: IdealPresentation) -> None:
    if a.arity != b.arity:
        raise ArityMismatchError(f"arity mismatch: {a.arity} vs {b.arity}")
    if a.kind != b.kind:
        raise KindMismatchError(f"kind mismatch: {a.kind.value} vs {b.kind.value}")


def sum_ideals(a: IdealPresentation, b: IdealPresentation) -> IdealPresentation:
    """I + J, presented by the reduced union of generators."""
    _check_binary(a, b)
    if a.is_unit or b.is_unit:
        return IdealPresentation((), a.kind, a.arity, is_unit=True)
    return reduce_generators(
        IdealPresentation(a.gens + b.gens, a.kind, a.arity)
    )


def intersect(a: IdealPresentation, b: IdealPresentation) -> IdealPresentation:
    """I ∩ J for radical well-mixed or perfect presentations.

    Both closures turn intersections into pairwise products of generators
    (sums of exponent vectors); the result is reduced.
    """
    _check_binary(a, b)
    if a.kind not in (ClosureKind.RADICAL_WELL_MIXED, ClosureKind.PERFECT):
        raise PreconditionError(
            "intersection is defined for radical_well_mixed and perfect presentations"
        )
    if a.is_unit:
        return reduce_generators(b)
    if b.is_unit:
        return reduce_generators(a)
    gens = tuple(u.add(w) for u in a.gens for w in b.gens)
    return reduce_generators(IdealPresentation(gens, a.kind, a.arity))


# -- primality ----------------------------------------------------------------


def is_prime(ideal: IdealPresentation) -> CharVector | None:
    """The character vector b with [gens] = m^b, or None.

    Decided by: the radical well-mixed closure of the generators has exactly
    one irreducible component b; every generator yi^(x^{b_i}) of m^b lies in
    the plain Delta-ideal; and every generator lies in m^b. The first two
    give m^b ⊆ [gens], the last [gens] ⊆ m^b.
    """
    if ideal.kind is not ClosureKind.DELTA:
        raise PreconditionError("primality test expects a delta presentation")
    if ideal.is_unit:
        return None
    from .decompose import component_member, standard_prime_decomposition

    rwm = ideal.with_kind(ClosureKind.RADICAL_WELL_MIXED)
    decomp = standard_prime_decomposition(rwm)
    if len(decomp.components) != 1:
        return None
    b = decomp.components[0]
    for i, entry in enumerate(b):
        if entry == -1:
            continue
        gen = ExpVector.unit(ideal.arity, i, ExpPoly.x_power(entry))
        if not member(gen, ideal):
            return None
    for u in ideal.gens:
        if not component_member(u, b, "rwm_prime"):
            return None
    return b


# -- closedness under a stronger closure --------------------------------------


@dataclass(frozen=True)
class ClosureCheck:
    """Outcome of ``is_closed_under``: yes, no with a witness, or inconclusive."""

    status: str
    witness: ExpVector | None = None

    def __post_init__(self):
        if self.status not in ("yes", "no", "inconclusive"):
            raise ValueError(f"bad status {self.status!r}")


_PREDICATE_KIND = {
    "radical": ClosureKind.RADICAL,
    "reflexive": ClosureKind.REFLEXIVE,
    "perfect": ClosureKind.PERFECT,
    "rwm": ClosureKind.RADICAL_WELL_MIXED,
}


def _axis_candidates(
    patterns: list[tuple[int, ...]], floor: list[CharVector], bound: int, cap: int
):
    """Monomials prod yi^(x^{d_i}) over each pattern's support, d boxed.

    These are the minimal elements of the perfect (floor 0) and radical
    well-mixed (floor = generator degree vector) closures; any witness to
    non-closedness dominates one of them coefficientwise.
    """
    seen = set()
    for pattern, base in zip(patterns, floor):
        coords = [i for i, s in enumerate(pattern) if s]
        ranges = [range(max(0, base[i]), min(bound, cap) + 1) for i in coords]
        for choice in itertools.product(*ranges):
            b = [-1] * len(pattern)
            for i, d in zip(coords, choice):
                b[i] = d
            key = tuple(b)
            if key not in seen:
                seen.add(key)
                yield pattern_monomial(key)


def is_closed_under(
    ideal: IdealPresentation,
    predicate: str,
    degree_cap: int | None = None,
    coeff_cap: int | None = None,
) -> ClosureCheck:
    """Whether the plain Delta-ideal [gens] is already closed under ``predicate``.

    Searches the minimal candidate monomials of the predicate's closure for
    one outside [gens]. For the radical and reflexive predicates the
    candidate sets (support indicators, exact down-shifts of generators) are
    provably exhaustive, so the answer is always definitive. For the perfect
    and rwm predicates the candidates are axis monomials over each
    generator's support pattern; the search is exhaustive once the box
    reaches maxdeg + #gens + 1, so the answer is definitive when the degree
    cap covers that bound and honestly inconclusive otherwise.

    Default caps: degree 2*maxdeg+2, coefficients maxcoeff+1.
    """
    if ideal.kind is not ClosureKind.DELTA:
        raise PreconditionError("closedness test expects a delta presentation")
    if predicate not in _PREDICATE_KIND:
        raise PreconditionError(f"unknown predicate {predicate!r}")
    if ideal.is_unit or not ideal.gens:
        return ClosureCheck("yes")

    max_deg = max(c.degree for u in ideal.gens for c in u.coords)
    max_coeff = max((max(c.coeffs) for u in ideal.gens for c in u.coords if not c.is_zero()))
    if degree_cap is None:
        degree_cap = 2 * max_deg + 2
    if coeff_cap is None:
        coeff_cap = max_coeff + 1

    definitive = True
    if predicate == "radical":
        candidates = [u.indicator() for u in ideal.gens]
    elif predicate == "reflexive":
        candidates = []
        for u in ideal.gens:
            down = min(c.order() for c in u.coords if not c.is_zero())
            for d in range(1, down + 1):
                shifted = [c.shift_down(d) for c in u.coords]
                candidates.append(ExpVector(shifted))
    else:
        bound = max_deg + len(ideal.gens) + 1
        definitive = bound <= degree_cap
        if predicate == "perfect":
            floor = [(0,) * ideal.arity for _ in ideal.gens]
        else:
            floor = [u.deg_vector() for u in ideal.gens]
        candidates = _axis_candidates(
            [u.support_pattern() for u in ideal.gens], floor, bound, degree_cap
        )

    check_kind = _PREDICATE_KIND[predicate]
    for v in candidates:
        if not member(v, ideal.with_kind(check_kind)):
            continue
        if not member(v, ideal):
            return ClosureCheck("no", v)
    return ClosureCheck("yes" if definitive else "inconclusive")
