"""Brute-force deciders used as ground truth for every fast criterion.

Nothing here consults the fast membership relations in
:mod:`deltamon.ideals`; the only shared primitive is ``divides_shifted``,
which is the definition of membership in a plain Delta-ideal rather than a
derived criterion.

Well-mixed closures are decided by an exact fixpoint. The closure of S is
{w + t} over the set of "cores" reachable from S by split moves
p + q -> p + x q alone (a global shift is the p = 0 case), because a split
of w + t either moves a unit of t, which only changes t, or moves a unit of
w. Split moves preserve per-coordinate coefficient sums and decompose into
single-unit promotions d -> d + 1 whose intermediates all stay suffix-sum
below the final core, so a breadth-first search over unit promotions,
pruned to cores below the target, visits every core that can witness
membership. Radical well-mixed membership reduces to the same search
against M * target, where M is the largest per-coordinate coefficient sum
over the generators: the witness set {m : m * v in the closure} is upward
closed, and any core fitting under some m * v already fits under M * v.

The radical, reflexive and perfect closures are decided by exhausting their
defining quantifier (a multiplier m, a shift x^m, a nonzero polynomial g)
under explicit caps. A found witness is definitive; an exhausted search is
definitive only when the caps cover the worst-case witness the completeness
arguments produce, and is otherwise reported as FALSE_AT_CAPS, never as a
plain false.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError
from .exponents import ExpPoly
from .monomials import ExpVector, divides_shifted


@dataclass(frozen=True)
class OracleCaps:
    max_degree: int = 3
    max_coeff_sum: int = 6
    max_states: int = 10**6

    def __post_init__(self):
        if self.max_degree < 0 or self.max_coeff_sum < 1 or self.max_states < 1:
            raise ValueError("oracle caps must be positive")

    def admits(self, v: ExpVector) -> bool:
        return all(
            c.degree <= self.max_degree and c.total <= self.max_coeff_sum
            for c in v.coords
        )

    def require(self, v: ExpVector) -> None:
        if not self.admits(v):
            raise CapExceededError(
                f"target {v!r} exceeds oracle caps "
                f"(degree {self.max_degree}, coefficient sum {self.max_coeff_sum})"
            )


class Verdict(Enum):
    TRUE = "true"
    FALSE = "false"
    FALSE_AT_CAPS = "false_at_caps"

    def __bool__(self) -> bool:
        return self is Verdict.TRUE


def in_delta_ideal(v: ExpVector, gens: Iterable[ExpVector]) -> bool:
    """Membership in [S] straight from the definition."""
    return any(divides_shifted(u, v) is not None for u in gens)


# -- well-mixed fixpoint ------------------------------------------------------


def _coords_key(v: ExpVector) -> tuple[tuple[int, ...], ...]:
    return tuple(c.coeffs for c in v.coords)


def _core_search(
    target: ExpVector, gens: Sequence[ExpVector], max_states: int
) -> bool:
    """Whether some core reachable from the generators fits under target.

    States are cores pruned to suffix-sum below the target; moves promote a
    single coefficient unit one degree up in one coordinate.
    """
    degs = [c.degree for c in target.coords]
    seeds = [
        u for u in gens
        if u.precedes(target)
        and all(a.total <= b.total for a, b in zip(u.coords, target.coords))
    ]
    seen = set()
    queue = deque()
    for u in seeds:
        key = _coords_key(u)
        if key not in seen:
            seen.add(key)
            queue.append(u)
    while queue:
        w = queue.popleft()
        if w.leq(target):
            return True
        for j, poly in enumerate(w.coords):
            for d, c in enumerate(poly.coeffs):
                if not c or d + 1 > degs[j]:
                    continue
                cs = list(poly.coeffs)
                cs[d] -= 1
                if d + 1 < len(cs):
                    cs[d + 1] += 1
                else:
                    cs.append(1)
                moved = ExpPoly(cs)
                if not moved.precedes(target.coords[j]):
                    continue
                coords = list(w.coords)
                coords[j] = moved
                nxt = ExpVector(coords)
                key = _coords_key(nxt)
                if key not in seen:
                    if len(seen) >= max_states:
                        raise CapExceededError(
                            f"well-mixed fixpoint exceeded {max_states} states"
                        )
                    seen.add(key)
                    queue.append(nxt)
    return False


def wm_closure_decide(
    v: ExpVector, gens: Sequence[ExpVector], caps: OracleCaps = OracleCaps()
) -> bool:
    """Exact membership of Y^v in the well-mixed closure of the generators."""
    caps.require(v)
    return _core_search(v, gens, caps.max_states)


def rwm_closure_decide(
    v: ExpVector, gens: Sequence[ExpVector], caps: OracleCaps = OracleCaps()
) -> bool:
    """Exact membership of Y^v in the radical well-mixed closure."""
    caps.require(v)
    scale = max(
        (c.total for u in gens for c in u.coords), default=1
    )
    return _core_search(v.scale(max(scale, 1)), gens, caps.max_states)


# -- bounded searches for radical / reflexive / perfect -----------------------


def enumerate_exp_polys(max_degree: int, max_coeff_sum: int) -> list[ExpPoly]:
    """Every ExpPoly with degree <= max_degree and coefficient sum <= the cap."""
    out = []
    slots = max_degree + 1

    def rec(prefix: list[int], budget: int):
        if len(prefix) == slots:
            out.append(ExpPoly(prefix))
            return
        for c in range(budget + 1):
            rec(prefix + [c], budget - c)

    rec([], max_coeff_sum)
    out.sort(key=ExpPoly.sort_key)
    return out


def enumerate_exp_vectors(
    arity: int, max_degree: int, max_coeff_sum: int
) -> Iterator[ExpVector]:
    """Every ExpVector whose coordinates all satisfy the caps, sorted."""
    polys = enumerate_exp_polys(max_degree, max_coeff_sum)
    for coords in itertools.product(polys, repeat=arity):
        yield ExpVector(coords)


def _max_gen_coeff(gens: Sequence[ExpVector]) -> int:
    return max(
        (c for u in gens for p in u.coords for c in p.coeffs), default=0
    )


def bounded_closure_decide(
    v: ExpVector,
    gens: Sequence[ExpVector],
    closure: str,
    caps: OracleCaps = OracleCaps(),
) -> Verdict:
    """Search the defining witness of the radical/reflexive/perfect closures.

    radical    some m >= 1 with m*v in [S]; m runs to maxcoeff(S) * |v|.
               Exhaustion is always definitive: a witness scales any single
               coefficient of v past the largest generator coefficient, and
               m = maxcoeff(S) already does so wherever possible.
    reflexive  some m >= 0 with x^m v in [S]; m runs to caps.max_degree.
               Definitive once the cap reaches the largest generator degree,
               since shifting v further than any generator stretches cannot
               create new fits.
    perfect    some nonzero g with g*v in [S]; g runs over degree <=
               caps.max_degree, |g| <= caps.max_coeff_sum. Definitive once
               the caps admit the saturating window
               maxcoeff(S) * (1 + x + ... + x^(D_S + D_v)).
    """
    if closure == "radical":
        bound = max(1, _max_gen_coeff(gens) * sum(c.total for c in v.coords))
        for m in range(1, bound + 1):
            if in_delta_ideal(v.scale(m), gens):
                return Verdict.TRUE
        return Verdict.FALSE
    if closure == "reflexive":
        for m in range(caps.max_degree + 1):
            if in_delta_ideal(v.shift(m), gens):
                return Verdict.TRUE
        max_gen_deg = max(
            (c.degree for u in gens for c in u.coords), default=0
        )
        return Verdict.FALSE if caps.max_degree >= max_gen_deg else Verdict.FALSE_AT_CAPS
    if closure == "perfect":
        for g in enumerate_exp_polys(caps.max_degree, caps.max_coeff_sum):
            if g.is_zero():
                continue
            if in_delta_ideal(ExpVector(c.mul(g) for c in v.coords), gens):
                return Verdict.TRUE
        d_window = max(
            max((c.degree for u in gens for c in u.coords), default=0), 0
        ) + max(max((c.degree for c in v.coords), default=0), 0)
        definitive = caps.max_degree >= d_window and caps.max_coeff_sum >= max(
            1, _max_gen_coeff(gens)
        ) * (d_window + 1)
        return Verdict.FALSE if definitive else Verdict.FALSE_AT_CAPS
    raise ValueError(f"unknown closure {closure!r}")


# -- extensional checks -------------------------------------------------------


def decomposition_grid_check(ideal, decomp, caps: OracleCaps = OracleCaps()):
    """Disagreements between an ideal and the intersection of components.

    Enumerates every monomial within caps and compares fast membership in
    the presented ideal against membership in all components. Returns the
    offending vectors with both verdicts; empty means the decomposition
    presents the same set.
    """
    from .decompose import component_member
    from .ideals import member

    out = []
    for v in enumerate_exp_vectors(ideal.arity, caps.max_degree, caps.max_coeff_sum):
        lhs = member(v, ideal)
        rhs = all(
            component_member(v, b, decomp.flavor) for b in decomp.components
        )
        if lhs != rhs:
            out.append((v, lhs, rhs))
    return out


def transversals_brute(edges: Sequence[frozenset[int]], n: int) -> list[frozenset[int]]:
    """Minimal hitting sets by checking all 2^n subsets.

    A subset is a minimal transversal iff it meets every edge and dropping
    any single vertex misses some edge.
    """
    masks = [sum(1 << i for i in e) for e in edges]
    out = []
    for t in range(1 << n):
        if any(not (t & e) for e in masks):
            continue
        if all(
            any(not ((t & ~(1 << i)) & e) for e in masks)
            for i in range(n)
            if t & (1 << i)
        ):
            out.append(frozenset(i for i in range(n) if t & (1 << i)))
    return sorted(out, key=sorted)
