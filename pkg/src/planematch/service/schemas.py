"""Pydantic request/response models for the HTTP service.

Counts travel as decimal strings so clients never need big-integer JSON
support; point sets travel as lists of [x, y] integer pairs.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class PointSetPayload(BaseModel):
    points: list[tuple[int, int]] = Field(min_length=1)


class CountRequest(PointSetPayload):
    max_enum: int = 24
    use_fast_path: bool = True


class CountResponse(BaseModel):
    n: int
    k: int
    pm: str
    catalan_k: str
    gnt: str


class EnumerateRequest(PointSetPayload):
    max_enum: int = 20
    limit: int | None = None


class EnumerateResponse(BaseModel):
    count: int
    matchings: list[list[tuple[int, int]]]


class WitnessRequest(PointSetPayload):
    include_trace: bool = True


class TraceModel(BaseModel):
    case_tag: str
    piercing_pair: tuple[tuple[int, int], tuple[int, int]]
    q: int | None = None
    j0: int | None = None
    delta: int | None = None
    r: int | None = None
    r_prime: int | None = None
    s1: list[int] | None = None
    s2: list[int] | None = None


class WitnessResponse(BaseModel):
    found: bool
    reason: str | None = None
    matching: list[tuple[int, int]] | None = None
    trace: TraceModel | None = None


class ClassifyResponse(BaseModel):
    classification: str


class VerifyRequest(PointSetPayload):
    max_enum: int = 24


class ReportModel(BaseModel):
    n: int
    k: int
    pm: str | None
    catalan_k: str
    gnt: str
    classification: str
    witness_found: bool
    consistent: bool
    skipped_checks: list[str]
    failed_checks: list[str]


class GenerateRequest(BaseModel):
    kind: str
    n: int = 6
    seed: int = 0
    radius: int = 10**6


class GenerateResponse(BaseModel):
    points: list[tuple[int, int]]


class ExperimentRequest(BaseModel):
    trials: int = Field(ge=0)
    n_min: int = 4
    n_max: int = 12
    seed: int = 0
    kinds: list[str] = ["random_disk"]
    max_enum: int = 24


class FailureModel(BaseModel):
    seed: int
    n: int
    check: str


class SummaryModel(BaseModel):
    trials: int
    n_range: tuple[int, int]
    failures: list[FailureModel]
    timings: dict[str, float]


class SvgRequest(PointSetPayload):
    matching: list[tuple[int, int]] | None = None
    highlight: bool = False
