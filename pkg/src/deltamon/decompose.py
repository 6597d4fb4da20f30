"""Prime decompositions of radical well-mixed and perfect monomial ideals.

An irreducible component is named by a character vector b. For the radical
well-mixed flavor, m^b is the ideal generated by the single-variable
monomials yi^(x^{b_i}) over the entries with b_i != -1; a monomial lies in
it iff some coordinate reaches degree b_i. For the perfect flavor, p^b with
b in {0,1}^n is generated by the variables yi with b_i = 1; a monomial lies
in it iff its support hits {i : b_i = 1}.

``standard_prime_decomposition`` exchanges the union over minimized
generator degree vectors with an intersection by enumerating choice
functions (one coordinate per generator) and absorbing redundant
components. Components are prime, so an antichain under containment is
automatically an irredundant intersection, which is unique.

``perfect_prime_decomposition`` reduces generators to support patterns and
intersects over the minimal transversals of the resulting hypergraph,
computed by the iterated-product construction with absorption. The
exhaustive-subset brute force lives in :mod:`deltamon.oracle` so the two
routes stay independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityMismatchError, CapExceededError, PreconditionError
from .monomials import CharVector, ExpVector, pattern_monomial
from .ideals import (
    ClosureKind,
    IdealPresentation,
    reduce_generators,
)

FLAVORS = ("rwm_prime", "perfect_prime")


@dataclass(frozen=True)
class Decomposition:
    """A finite intersection of irreducible components, canonically sorted."""

    components: tuple[CharVector, ...]
    flavor: str
    arity: int

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        comps = []
        for b in self.components:
            b = tuple(b)
            if len(b) != self.arity:
                raise ArityMismatchError(
                    f"component arity {len(b)} does not match {self.arity}"
                )
            low = 0 if self.flavor == "perfect_prime" else -1
            for entry in b:
                if not isinstance(entry, int) or entry < low:
                    raise ValueError(f"bad component entry {entry!r}")
                if self.flavor == "perfect_prime" and entry > 1:
                    raise ValueError("perfect components are 0/1 vectors")
            comps.append(b)
        object.__setattr__(self, "components", tuple(sorted(set(comps))))


def component_member(v: ExpVector, b: Sequence[int], flavor: str) -> bool:
    """Whether Y^v lies in the irreducible component named by b."""
    if flavor == "rwm_prime":
        return any(
            entry != -1 and c.degree >= entry for entry, c in zip(b, v.coords)
        )
    if flavor == "perfect_prime":
        return any(entry == 1 and not c.is_zero() for entry, c in zip(b, v.coords))
    raise ValueError(f"unknown flavor {flavor!r}")


def component_contains(a: Sequence[int], b: Sequence[int], flavor: str = "rwm_prime") -> bool:
    """Whether the component named a is contained in the component named b."""
    if flavor == "rwm_prime":
        return all(
            x == -1 or (y != -1 and x >= y) for x, y in zip(a, b)
        )
    if flavor == "perfect_prime":
        return all(y == 1 or x == 0 for x, y in zip(a, b))
    raise ValueError(f"unknown flavor {flavor!r}")


def absorb_components(
    components: Iterable[CharVector], flavor: str
) -> list[CharVector]:
    """Drop every component that contains another one."""
    comps = sorted(set(tuple(b) for b in components))
    kept = []
    for b in comps:
        if not any(
            a != b and component_contains(a, b, flavor) for a in comps
        ):
            kept.append(b)
    return kept


def standard_prime_decomposition(
    ideal: IdealPresentation, max_choices: int = 1_000_000
) -> Decomposition:
    """The unique irredundant decomposition of a radical well-mixed ideal.

    Minimize the generator degree vectors, then for every choice of one
    non-absent coordinate per vector emit the componentwise minima as a
    component, and absorb.
    """
    if ideal.kind is not ClosureKind.RADICAL_WELL_MIXED:
        raise PreconditionError(
            "standard decomposition expects a radical_well_mixed presentation"
        )
    if ideal.is_unit:
        raise PreconditionError("the unit ideal has no prime decomposition")
    vectors = [u.deg_vector() for u in reduce_generators(ideal).gens]
    option_sets = [
        [i for i, entry in enumerate(vec) if entry != -1] for vec in vectors
    ]
    count = 1
    for options in option_sets:
        count *= len(options)
        if count > max_choices:
            raise CapExceededError(
                f"{count}+ choice functions exceed the cap of {max_choices}"
            )
    components = set()
    for choice in itertools.product(*option_sets):
        mins = [-1] * ideal.arity
        for vec, i in zip(vectors, choice):
            if mins[i] == -1 or vec[i] < mins[i]:
                mins[i] = vec[i]
        components.add(tuple(mins))
    return Decomposition(
        tuple(absorb_components(components, "rwm_prime")), "rwm_prime", ideal.arity
    )


def minimal_transversals(edges: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    """Minimal hitting sets by the iterated product with absorption."""
    family: list[set[int]] = [set()]
    for edge in sorted(edges, key=sorted):
        grown: list[set[int]] = []
        for t in family:
            if t & edge:
                _absorb_set(grown, t)
                continue
            for v in sorted(edge):
                _absorb_set(grown, t | {v})
        family = grown
    return sorted((frozenset(t) for t in family), key=sorted)


def _absorb_set(family: list[set[int]], candidate: set[int]) -> None:
    """Insert candidate unless a kept set is contained in it; evict supersets."""
    for t in family:
        if t <= candidate:
            return
    family[:] = [t for t in family if not candidate <= t]
    family.append(candidate)


def perfect_prime_decomposition(ideal: IdealPresentation) -> Decomposition:
    """The minimal-transversal decomposition of a perfect monomial ideal."""
    if ideal.kind is not ClosureKind.PERFECT:
        raise PreconditionError(
            "perfect decomposition expects a perfect presentation"
        )
    if ideal.is_unit:
        raise PreconditionError("the unit ideal has no prime decomposition")
    edges = [
        frozenset(i for i, s in enumerate(u.support_pattern()) if s)
        for u in reduce_generators(ideal).gens
    ]
    components = [
        tuple(1 if i in t else 0 for i in range(ideal.arity))
        for t in minimal_transversals(edges)
    ]
    return Decomposition(tuple(components), "perfect_prime", ideal.arity)


def components_to_generators(
    decomp: Decomposition, max_choices: int = 1_000_000
) -> IdealPresentation:
    """Generators of the intersection of the components.

    Intersections of radical well-mixed ideals are generated by pairwise
    products, so picking one non-absent coordinate per component and
    accumulating the largest chosen threshold per coordinate yields a
    generating set of pattern monomials; reduction minimizes it.
    """
    if decomp.flavor != "rwm_prime":
        raise PreconditionError("generator extraction expects the rwm_prime flavor")
    option_sets = [
        [i for i, entry in enumerate(b) if entry != -1] for b in decomp.components
    ]
    count = 1
    for options in option_sets:
        count *= len(options)
        if count > max_choices:
            raise CapExceededError(
                f"{count}+ choice functions exceed the cap of {max_choices}"
            )
    gens = set()
    for choice in itertools.product(*option_sets):
        accum = [-1] * decomp.arity
        for b, i in zip(decomp.components, choice):
            if b[i] > accum[i]:
                accum[i] = b[i]
        gens.add(pattern_monomial(tuple(accum)))
    return reduce_generators(
        IdealPresentation(
            tuple(gens), ClosureKind.RADICAL_WELL_MIXED, decomp.arity
        )
    )
