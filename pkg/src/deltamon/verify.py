"""Grid harness comparing fast membership against the brute-force oracles.

For a random generator set and an exhaustive monomial grid, both the fast
criteria and the oracle deciders reduce to statements of the shape

    member(v)  =  OR over clauses  of  AND over coordinates j
                  of  table[clause][j][ v_j ]

because every quantifier involved (a shift, a multiplier, a reachable core)
either ranges over a small explicit set shared across coordinates or acts
on each coordinate independently. Split moves in particular never couple
coordinates, so the well-mixed oracle factors through per-coordinate
reachable-core tables. Tables are boolean vectors indexed by the grid's
one-coordinate polynomials, and the sweep over the full grid is a numpy
index/and/or pass, which keeps exhaustive arity-3 grids affordable.

The batched oracle columns are rebuilt from the definitions (unit-promotion
reachability, raw shifted divisibility), not from the relations in
:mod:`deltamon.ideals`; on top of the full-grid comparison, random sample
points are re-checked through the public ``member`` API and the per-query
oracle functions, tying the batch computation to both.

``run_verification`` returns the JSON-ready report the CLI ``verify`` verb
emits: {checked, disagreements, false_at_caps, ...}.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exponents import ExpPoly
from .monomials import ExpVector
from .ideals import ClosureKind, IdealPresentation, member
from .oracle import (
    OracleCaps,
    Verdict,
    bounded_closure_decide,
    enumerate_exp_polys,
    in_delta_ideal,
    rwm_closure_decide,
    wm_closure_decide,
)
from .text import render_monomial

VERIFY_KINDS = ("well_mixed", "radical_well_mixed", "radical", "reflexive", "perfect")

# Enumerating every nonzero g under the saturating-window caps gets slow
# past this many polynomials; beyond it the perfect column reports
# false-at-caps instead of exhausting the search.
_PERFECT_G_BUDGET = 4_000


@dataclass(frozen=True)
class VerifyConfig:
    arity: int = 2
    max_degree: int = 2
    max_coeff_sum: int = 2
    sets: int = 5
    seed: int = 0
    jobs: int = 1
    api_samples: int = 40
    oracle_samples: int = 25
    perfect_samples: int = 24

    def __post_init__(self):
        if self.arity < 1 or self.max_degree < 0 or self.max_coeff_sum < 1:
            raise ValueError("bad grid bounds")
        if self.sets < 1 or self.jobs < 1:
            raise ValueError("sets and jobs must be positive")


class Grid:
    """All monomials with per-coordinate degree and coefficient-sum caps."""

    def __init__(self, arity: int, max_degree: int, max_coeff_sum: int):
        self.arity = arity
        self.max_degree = max_degree
        self.max_coeff_sum = max_coeff_sum
        self.polys = enumerate_exp_polys(max_degree, max_coeff_sum)
        self.poly_index = {p.coeffs: i for i, p in enumerate(self.polys)}
        self.idx = np.array(
            list(itertools.product(range(len(self.polys)), repeat=arity)),
            dtype=np.int32,
        )

    def __len__(self) -> int:
        return len(self.idx)

    def vector(self, row: int) -> ExpVector:
        return ExpVector(self.polys[i] for i in self.idx[row])


def _eval_clauses(clauses, grid: Grid) -> np.ndarray:
    """OR over clauses of AND over coordinates of per-poly tables."""
    acc = np.zeros(len(grid), dtype=bool)
    for tables in clauses:
        if any(not t.any() for t in tables):
            continue
        m = tables[0][grid.idx[:, 0]]
        for j in range(1, grid.arity):
            m &= tables[j][grid.idx[:, j]]
        acc |= m
    return acc


def _poly_table(grid: Grid, test) -> np.ndarray:
    return np.fromiter((test(p) for p in grid.polys), dtype=bool, count=len(grid.polys))


# -- per-coordinate reachable cores (oracle side) ------------------------------


@lru_cache(maxsize=None)
def _coord_cores(coeffs: tuple[int, ...], max_degree: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient tuples reachable from ``coeffs`` by single-unit promotions.

    A promotion moves one unit of the coefficient at degree d to d + 1,
    capped at max_degree. The zero polynomial has itself as its only core.
    """
    seen = {coeffs}
    queue = [coeffs]
    while queue:
        cur = queue.pop()
        for d, c in enumerate(cur):
            if not c or d + 1 > max_degree:
                continue
            nxt = list(cur)
            nxt[d] -= 1
            if d + 1 < len(nxt):
                nxt[d + 1] += 1
            else:
                nxt.append(1)
            while nxt and nxt[-1] == 0:
                nxt.pop()
            key = tuple(nxt)
            if key not in seen:
                seen.add(key)
                queue.append(key)
    return tuple(sorted(seen))


def _fits_under(core: tuple[int, ...], target: tuple[int, ...], scale: int) -> bool:
    if len(core) > len(target):
        return False
    return all(c <= scale * t for c, t in zip(core, target))


def _core_table(grid: Grid, poly: ExpPoly, scale: int) -> np.ndarray:
    cores = _coord_cores(poly.coeffs, grid.max_degree)
    return _poly_table(
        grid, lambda p: any(_fits_under(w, p.coeffs, scale) for w in cores)
    )


# -- batched membership columns ------------------------------------------------


def _fast_column(grid: Grid, gens: list[ExpVector], kind: str) -> np.ndarray:
    """The fast criterion of :mod:`deltamon.ideals`, computed clause-wise."""
    D = grid.max_degree
    clauses = []
    for u in gens:
        if kind == "well_mixed":
            suff = [c.suffix_sums() for c in u.coords]

            def fits(p, s):
                ps = p.suffix_sums()
                return all(
                    x <= (ps[i] if i < len(ps) else 0) for i, x in enumerate(s)
                )

            clauses.append([_poly_table(grid, lambda p, s=s: fits(p, s)) for s in suff])
        elif kind == "radical_well_mixed":
            clauses.append(
                [
                    _poly_table(grid, lambda p, c=c: c.is_zero() or p.degree >= c.degree)
                    for c in u.coords
                ]
            )
        elif kind == "perfect":
            clauses.append(
                [
                    _poly_table(grid, lambda p, c=c: c.is_zero() or not p.is_zero())
                    for c in u.coords
                ]
            )
        elif kind == "radical":
            for i in range(D + 1):
                clauses.append(
                    [
                        _poly_table(
                            grid,
                            lambda p, c=c, i=i: not (
                                sum(1 << (d + i) for d in c.support())
                                & ~sum(1 << d for d in p.support())
                            ),
                        )
                        for c in u.coords
                    ]
                )
        elif kind == "reflexive":
            for i in range(D + 1):
                clauses.append(
                    [
                        _poly_table(grid, lambda p, c=c, i=i: c.shift(i).leq(p))
                        for c in u.coords
                    ]
                )
            for m in range(1, D + 1):
                clauses.append(
                    [
                        _poly_table(grid, lambda p, c=c, m=m: c.leq(p.shift(m)))
                        for c in u.coords
                    ]
                )
        else:
            raise ValueError(f"unknown kind {kind!r}")
    return _eval_clauses(clauses, grid)


def _oracle_column(grid: Grid, gens: list[ExpVector], kind: str) -> np.ndarray:
    """The oracle decision, rebuilt clause-wise from the definitions."""
    D = grid.max_degree
    clauses = []
    if kind == "well_mixed":
        for u in gens:
            clauses.append([_core_table(grid, c, 1) for c in u.coords])
    elif kind == "radical_well_mixed":
        scale = max((c.total for u in gens for c in u.coords), default=1)
        scale = max(scale, 1)
        for u in gens:
            clauses.append([_core_table(grid, c, scale) for c in u.coords])
    elif kind == "radical":
        top = max((c for u in gens for p in u.coords for c in p.coeffs), default=1)
        for u, i, m in itertools.product(gens, range(D + 1), range(1, top + 1)):
            clauses.append(
                [
                    _poly_table(grid, lambda p, c=c, i=i, m=m: c.shift(i).leq(p.scale(m)))
                    for c in u.coords
                ]
            )
    elif kind == "reflexive":
        for u, m in itertools.product(gens, range(D + 1)):
            for i in range(D + m + 1):
                clauses.append(
                    [
                        _poly_table(
                            grid, lambda p, c=c, i=i, m=m: c.shift(i).leq(p.shift(m))
                        )
                        for c in u.coords
                    ]
                )
    else:
        raise ValueError(f"no batched oracle for kind {kind!r}")
    return _eval_clauses(clauses, grid)


# -- the perfect closure: constructive witness and bounded search --------------


def _perfect_window(gens: list[ExpVector], v: ExpVector) -> tuple[int, int]:
    """Degree and coefficient-sum caps admitting the saturating witness."""
    d_gens = max(max((c.degree for u in gens for c in u.coords), default=0), 0)
    d_v = max(max((c.degree for c in v.coords), default=0), 0)
    top = max((c for u in gens for p in u.coords for c in p.coeffs), default=1)
    window = d_gens + d_v
    return window, max(1, top) * (window + 1)


def _g_space_size(max_degree: int, max_coeff_sum: int) -> int:
    """Number of polynomials with the given caps (stars and bars)."""
    import math

    slots = max_degree + 1
    return math.comb(max_coeff_sum + slots, slots)


def _perfect_witness_poly(gens: list[ExpVector], v: ExpVector) -> ExpPoly:
    window, _ = _perfect_window(gens, v)
    top = max((c for u in gens for p in u.coords for c in p.coeffs), default=1)
    return ExpPoly((max(1, top),) * (window + 1))


def _check_perfect_samples(grid, gens, fast, rng, budget, record):
    """Sampled two-sided validation of the perfect fast criterion.

    On fast-true points the saturating window g must witness g*v in [S];
    on fast-false points the bounded search at window caps must exhaust
    (or overflow the budget, counted as false-at-caps).
    """
    false_at_caps = 0
    rows = list(range(len(grid)))
    rng.shuffle(rows)
    true_rows = [r for r in rows if fast[r]][: budget * 8]
    false_rows = [r for r in rows if not fast[r]][:budget]
    for r in true_rows:
        v = grid.vector(r)
        g = _perfect_witness_poly(gens, v)
        ok = in_delta_ideal(ExpVector(c.mul(g) for c in v.coords), gens)
        if not ok:
            record("perfect", v, True, "false", "witness_vs_fast")
    for r in false_rows:
        v = grid.vector(r)
        gd, gc = _perfect_window(gens, v)
        if _g_space_size(gd, gc) > _PERFECT_G_BUDGET:
            false_at_caps += 1
            continue
        verdict = bounded_closure_decide(
            v, gens, "perfect", OracleCaps(gd, gc, 10**6)
        )
        if verdict is Verdict.TRUE:
            record("perfect", v, False, "true", "fast_vs_oracle")
        elif verdict is Verdict.FALSE_AT_CAPS:
            false_at_caps += 1
    return len(true_rows) + len(false_rows), false_at_caps


# -- random generator sets ------------------------------------------------------


def random_generators(
    rng: random.Random, arity: int, max_degree: int, max_coeff_sum: int
) -> list[ExpVector]:
    """1 to 3 random nonzero vectors within the grid caps."""
    gens = set()
    for _ in range(rng.randint(1, 3)):
        while True:
            coords = []
            for _ in range(arity):
                units = rng.randint(0, max_coeff_sum)
                cs = [0] * (max_degree + 1)
                for _ in range(units):
                    cs[rng.randint(0, max_degree)] += 1
                coords.append(ExpPoly(cs))
            v = ExpVector(coords)
            if not v.is_zero():
                gens.add(v)
                break
    return sorted(gens, key=ExpVector.sort_key)


# -- the harness ----------------------------------------------------------------


def _verify_one_set(grid: Grid, gens: list[ExpVector], rng_seed: int, cfg: VerifyConfig):
    """Compare fast and oracle columns for one generator set; return stats."""
    rng = random.Random(rng_seed)
    checked = 0
    false_at_caps = 0
    disagreements = []
    gen_text = [render_monomial(u) for u in gens]

    def record(kind, v, fast_val, oracle_val, stage):
        disagreements.append(
            {
                "kind": kind,
                "stage": stage,
                "generators": gen_text,
                "monomial": render_monomial(v),
                "fast": bool(fast_val),
                "oracle": oracle_val,
            }
        )

    caps = OracleCaps(grid.max_degree, grid.max_coeff_sum, 10**6)
    per_query = {
        "well_mixed": lambda v: Verdict.TRUE if wm_closure_decide(v, gens, caps) else Verdict.FALSE,
        "radical_well_mixed": lambda v: Verdict.TRUE if rwm_closure_decide(v, gens, caps) else Verdict.FALSE,
        "radical": lambda v: bounded_closure_decide(v, gens, "radical", caps),
        "reflexive": lambda v: bounded_closure_decide(v, gens, "reflexive", caps),
    }
    kind_enum = {
        "well_mixed": ClosureKind.WELL_MIXED,
        "radical_well_mixed": ClosureKind.RADICAL_WELL_MIXED,
        "radical": ClosureKind.RADICAL,
        "reflexive": ClosureKind.REFLEXIVE,
        "perfect": ClosureKind.PERFECT,
    }

    for kind in VERIFY_KINDS:
        fast = _fast_column(grid, gens, kind)
        if kind == "perfect":
            n, fac = _check_perfect_samples(
                grid, gens, fast, rng, cfg.perfect_samples, record
            )
            checked += n
            false_at_caps += fac
        else:
            oracle = _oracle_column(grid, gens, kind)
            checked += len(grid)
            for r in np.nonzero(fast != oracle)[0]:
                record(kind, grid.vector(int(r)), fast[r], str(bool(oracle[r])).lower(), "fast_vs_oracle")
            for r in rng.sample(range(len(grid)), min(cfg.oracle_samples, len(grid))):
                v = grid.vector(r)
                verdict = per_query[kind](v)
                if verdict is Verdict.FALSE_AT_CAPS:
                    false_at_caps += 1
                elif bool(verdict) != bool(oracle[r]):
                    record(kind, v, oracle[r], verdict.value, "batch_vs_query")

        ideal = IdealPresentation(tuple(gens), kind_enum[kind], grid.arity)
        for r in rng.sample(range(len(grid)), min(cfg.api_samples, len(grid))):
            v = grid.vector(r)
            if member(v, ideal) != bool(fast[r]):
                record(kind, v, fast[r], "api_mismatch", "api_vs_batch")

    return checked, false_at_caps, disagreements


def run_verification(cfg: VerifyConfig) -> dict:
    """Run the harness over random generator sets; JSON-ready report."""
    grid = Grid(cfg.arity, cfg.max_degree, cfg.max_coeff_sum)
    rng = random.Random(cfg.seed)
    work = []
    for k in range(cfg.sets):
        gens = random_generators(rng, cfg.arity, cfg.max_degree, cfg.max_coeff_sum)
        work.append((gens, rng.randrange(2**32)))

    def run(item):
        gens, seed = item
        return _verify_one_set(grid, gens, seed, cfg)

    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(run, work))
    else:
        results = [run(item) for item in work]

    checked = sum(r[0] for r in results)
    false_at_caps = sum(r[1] for r in results)
    disagreements = [d for r in results for d in r[2]]
    return {
        "arity": cfg.arity,
        "caps": {
            "max_degree": cfg.max_degree,
            "max_coeff_sum": cfg.max_coeff_sum,
        },
        "sets": cfg.sets,
        "seed": cfg.seed,
        "kinds": list(VERIFY_KINDS),
        "checked": checked,
        "false_at_caps": false_at_caps,
        "disagreements": disagreements,
    }
