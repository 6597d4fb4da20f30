"""FastAPI application exposing the library over POST /v1/<verb>.

Stateless: every request carries the full ideal presentation. Library
errors map onto HTTP statuses by their stable ``code``: parse -> 400,
precondition -> 409, cap_exceeded -> 422; malformed request bodies -> 400
with code "usage". Error bodies mirror successful ones in carrying the
top-level schema version.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..decompose import standard_prime_decomposition, perfect_prime_decomposition
from ..duality import alexander_dual, alexander_dual_decomposition, duality_context
from ..errors import DeltamonError, PreconditionError
from ..ideals import (
    ClosureKind,
    IdealPresentation,
    is_closed_under,
    is_prime,
    member,
    reduce_generators,
)
from ..text import parse_kind, parse_monomial, render_ideal, render_monomial
from ..verify import VerifyConfig, run_verification
from . import schemas

_STATUS = {"parse": 400, "precondition": 409, "cap_exceeded": 422}

CHECK_PREDICATES = ("radical", "reflexive", "perfect", "rwm", "prime")


def _build_ideal(model: schemas.IdealModel) -> IdealPresentation:
    kind = parse_kind(model.kind)
    gens = tuple(parse_monomial(s, model.arity) for s in model.generators)
    return IdealPresentation(gens, kind, model.arity)


def _ideal_payload(ideal: IdealPresentation) -> schemas.IdealPayload:
    return schemas.IdealPayload(**render_ideal(ideal))


def create_app() -> FastAPI:
    app = FastAPI(title="deltamon", version=__version__)

    @app.exception_handler(DeltamonError)
    async def library_error(request, exc: DeltamonError):
        return JSONResponse(
            status_code=_STATUS.get(exc.code, 500),
            content={
                "schema": 1,
                "error": {"code": exc.code, "message": str(exc)},
            },
        )

    @app.exception_handler(RequestValidationError)
    async def usage_error(request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={
                "schema": 1,
                "error": {"code": "usage", "message": str(exc.errors())},
            },
        )

    @app.get("/v1/health")
    async def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/v1/member")
    async def member_route(req: schemas.MemberRequest) -> schemas.MemberResponse:
        ideal = _build_ideal(req.ideal)
        verdicts = []
        for text in req.monomials:
            v = parse_monomial(text, ideal.arity)
            verdicts.append(
                schemas.MemberVerdict(
                    monomial=render_monomial(v), member=member(v, ideal)
                )
            )
        return schemas.MemberResponse(
            verdicts=verdicts, all=all(x.member for x in verdicts)
        )

    @app.post("/v1/closure")
    async def closure_route(req: schemas.ClosureRequest) -> schemas.IdealResponse:
        ideal = _build_ideal(req.ideal)
        target = parse_kind(req.kind)
        return schemas.IdealResponse(
            ideal=_ideal_payload(reduce_generators(ideal.with_kind(target)))
        )

    @app.post("/v1/reduce")
    async def reduce_route(req: schemas.ReduceRequest) -> schemas.IdealResponse:
        ideal = _build_ideal(req.ideal)
        return schemas.IdealResponse(ideal=_ideal_payload(reduce_generators(ideal)))

    @app.post("/v1/decompose")
    async def decompose_route(req: schemas.DecomposeRequest) -> schemas.DecomposeResponse:
        ideal = _build_ideal(req.ideal)
        if ideal.kind is ClosureKind.RADICAL_WELL_MIXED:
            decomp = standard_prime_decomposition(ideal)
        elif ideal.kind is ClosureKind.PERFECT:
            decomp = perfect_prime_decomposition(ideal)
        else:
            raise PreconditionError(
                "decompose expects a radical_well_mixed or perfect presentation"
            )
        return schemas.DecomposeResponse(
            flavor=decomp.flavor,
            arity=decomp.arity,
            components=[list(b) for b in decomp.components],
        )

    @app.post("/v1/dual")
    async def dual_route(req: schemas.DualRequest) -> schemas.DualResponse:
        ideal = _build_ideal(req.ideal)
        point = tuple(req.point) if req.point is not None else None
        ctx = duality_context(ideal, point)
        dual = alexander_dual(ctx)
        decomp = alexander_dual_decomposition(ctx)
        return schemas.DualResponse(
            point=list(ctx.point),
            generators=[render_monomial(u) for u in dual.gens],
            components=[list(b) for b in decomp.components],
        )

    @app.post("/v1/check")
    async def check_route(req: schemas.CheckRequest) -> schemas.CheckResponse:
        ideal = _build_ideal(req.ideal)
        if req.predicate not in CHECK_PREDICATES:
            raise PreconditionError(
                f"unknown predicate {req.predicate!r}; expected one of {CHECK_PREDICATES}"
            )
        if req.predicate == "prime":
            b = is_prime(ideal)
            return schemas.CheckResponse(
                predicate="prime",
                prime=b is not None,
                component=list(b) if b is not None else None,
            )
        result = is_closed_under(
            ideal, req.predicate, degree_cap=req.degree_cap, coeff_cap=req.coeff_cap
        )
        return schemas.CheckResponse(
            predicate=req.predicate,
            status=result.status,
            witness=render_monomial(result.witness) if result.witness else None,
        )

    @app.post("/v1/verify")
    async def verify_route(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        report = run_verification(
            VerifyConfig(
                arity=req.arity,
                max_degree=req.max_degree,
                max_coeff_sum=req.max_coeff_sum,
                sets=req.sets,
                seed=req.seed,
                jobs=req.jobs,
            )
        )
        return schemas.VerifyResponse(**report)

    return app
