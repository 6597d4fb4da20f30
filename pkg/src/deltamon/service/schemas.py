"""Request and response models for the HTTP service.

Responses carry a top-level ``schema`` version field; the attribute is
named ``schema_version`` internally because ``schema`` shadows a BaseModel
attribute, and is serialized under the public name via an alias.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class IdealModel(BaseModel):
    """An ideal presentation on the wire: generators as monomial text."""

    model_config = ConfigDict(extra="forbid")

    kind: str
    arity: int = Field(ge=1)
    generators: list[str] = Field(default_factory=list)


class MemberRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ideal: IdealModel
    monomials: list[str] = Field(min_length=1)


class ClosureRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ideal: IdealModel
    kind: str


class ReduceRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ideal: IdealModel


class DecomposeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ideal: IdealModel


class DualRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ideal: IdealModel
    point: list[int] | None = None


class CheckRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ideal: IdealModel
    predicate: Literal["radical", "reflexive", "perfect", "rwm", "prime"]
    degree_cap: int | None = Field(default=None, ge=0)
    coeff_cap: int | None = Field(default=None, ge=1)


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    arity: int = Field(default=2, ge=1, le=4)
    max_degree: int = Field(default=2, ge=0, le=6)
    max_coeff_sum: int = Field(default=2, ge=1, le=6)
    sets: int = Field(default=3, ge=1, le=500)
    seed: int = 0
    jobs: int = Field(default=1, ge=1, le=32)


class SchemaResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, serialization_alias="schema")


class IdealPayload(BaseModel):
    kind: str
    arity: int
    generators: list[str]
    is_unit: bool


class MemberVerdict(BaseModel):
    monomial: str
    member: bool


class MemberResponse(SchemaResponse):
    verdicts: list[MemberVerdict]
    all: bool


class IdealResponse(SchemaResponse):
    ideal: IdealPayload


class DecomposeResponse(SchemaResponse):
    flavor: str
    arity: int
    components: list[list[int]]


class DualResponse(SchemaResponse):
    point: list[int]
    generators: list[str]
    components: list[list[int]]


class CheckResponse(SchemaResponse):
    predicate: str
    status: str | None = None
    witness: str | None = None
    prime: bool | None = None
    component: list[int] | None = None


class CapsPayload(BaseModel):
    max_degree: int
    max_coeff_sum: int


class DisagreementPayload(BaseModel):
    kind: str
    stage: str
    generators: list[str]
    monomial: str
    fast: bool
    oracle: str


class VerifyResponse(SchemaResponse):
    arity: int
    caps: CapsPayload
    sets: int
    seed: int
    kinds: list[str]
    checked: int
    false_at_caps: int
    disagreements: list[DisagreementPayload]


class HealthResponse(SchemaResponse):
    status: str
    version: str
