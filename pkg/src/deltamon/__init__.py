"""Monomial difference ideals with symbolic exponents in N[x].

Exponent arithmetic (:mod:`deltamon.exponents`), monomial vectors
(:mod:`deltamon.monomials`), membership and presentations for six closure
kinds (:mod:`deltamon.ideals`), prime decompositions
(:mod:`deltamon.decompose`), Alexander duality (:mod:`deltamon.duality`),
brute-force oracles (:mod:`deltamon.oracle`), the fast-vs-oracle harness
(:mod:`deltamon.verify`), text formats (:mod:`deltamon.text`), and an HTTP
service plus CLI (:mod:`deltamon.service`, :mod:`deltamon.cli`).
"""

from .errors import (
    ArityMismatchError,
    CapExceededError,
    DeltamonError,
    KindMismatchError,
    ParseError,
    PreconditionError,
)
from .exponents import ExpPoly
from .monomials import (
    CharVector,
    ExpVector,
    char_leq,
    divides_shifted,
    minimal_elements,
    pattern_monomial,
    splits,
    validate_char_vector,
)
from .ideals import (
    ClosureCheck,
    ClosureKind,
    IdealPresentation,
    dominates,
    intersect,
    is_closed_under,
    is_prime,
    member,
    presentation,
    reduce_generators,
    sum_ideals,
)
from .decompose import (
    Decomposition,
    component_contains,
    component_member,
    components_to_generators,
    minimal_transversals,
    perfect_prime_decomposition,
    standard_prime_decomposition,
)
from .duality import (
    DualityContext,
    a_complement,
    alexander_dual,
    alexander_dual_decomposition,
    char_vectors,
    complementation_check,
    default_point,
    duality_context,
    involution_check,
)
from .oracle import (
    OracleCaps,
    Verdict,
    bounded_closure_decide,
    decomposition_grid_check,
    enumerate_exp_polys,
    enumerate_exp_vectors,
    in_delta_ideal,
    rwm_closure_decide,
    transversals_brute,
    wm_closure_decide,
)
from .text import (
    parse_ideal_file,
    parse_ideal_text,
    parse_kind,
    parse_monomial,
    parse_poly,
    render_ideal,
    render_monomial,
    render_poly,
)
from .verify import VerifyConfig, run_verification

__version__ = "0.1.0"

__all__ = [
    "ArityMismatchError",
    "CapExceededError",
    "CharVector",
    "ClosureCheck",
    "ClosureKind",
    "Decomposition",
    "DeltamonError",
    "DualityContext",
    "ExpPoly",
    "ExpVector",
    "IdealPresentation",
    "KindMismatchError",
    "OracleCaps",
    "ParseError",
    "PreconditionError",
    "Verdict",
    "VerifyConfig",
    "a_complement",
    "alexander_dual",
    "alexander_dual_decomposition",
    "bounded_closure_decide",
    "char_leq",
    "char_vectors",
    "complementation_check",
    "component_contains",
    "component_member",
    "components_to_generators",
    "decomposition_grid_check",
    "default_point",
    "divides_shifted",
    "dominates",
    "duality_context",
    "enumerate_exp_polys",
    "enumerate_exp_vectors",
    "in_delta_ideal",
    "intersect",
    "involution_check",
    "is_closed_under",
    "is_prime",
    "member",
    "minimal_elements",
    "minimal_transversals",
    "parse_ideal_file",
    "parse_ideal_text",
    "parse_kind",
    "parse_monomial",
    "parse_poly",
    "pattern_monomial",
    "perfect_prime_decomposition",
    "presentation",
    "reduce_generators",
    "render_ideal",
    "render_monomial",
    "render_poly",
    "run_verification",
    "rwm_closure_decide",
    "splits",
    "standard_prime_decomposition",
    "sum_ideals",
    "transversals_brute",
    "validate_char_vector",
    "wm_closure_decide",
    "__version__",
]
