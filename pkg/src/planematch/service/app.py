"""FastAPI service wrapping the core package."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from ..classify import classify, verify_main_theorem
from ..errors import PlanematchError
from ..experiment import run_experiment
from ..generators import GeneratorSpec, generate
from ..geometry import PointSet
from ..matchings import (
    Matching,
    catalan,
    count_matchings,
    enumerate_matchings,
    find_piercing_pair,
    gnt_lower_bound,
)
from ..pointset_io import report_to_dict, summary_to_dict
from ..svg import render_svg
from ..witness import build_witness
from . import schemas

app = FastAPI(
    title="planematch",
    description="Exact counting, enumeration and piercing-witness "
    "construction for non-crossing perfect matchings of planar point sets.",
)


@app.exception_handler(PlanematchError)
async def _domain_error(_request: Request, exc: PlanematchError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


def _point_set(points) -> PointSet:
    return PointSet.of(points)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/count", response_model=schemas.CountResponse)
def count(req: schemas.CountRequest) -> schemas.CountResponse:
    ps = _point_set(req.points)
    pm = count_matchings(ps, max_n=req.max_enum,
                         use_convex_fast_path=req.use_fast_path)
    return schemas.CountResponse(
        n=len(ps),
        k=len(ps) // 2,
        pm=str(pm),
        catalan_k=str(catalan(len(ps) // 2)),
        gnt=str(gnt_lower_bound(ps)),
    )


@app.post("/enumerate", response_model=schemas.EnumerateResponse)
def enumerate_(req: schemas.EnumerateRequest) -> schemas.EnumerateResponse:
    ps = _point_set(req.points)
    matchings = enumerate_matchings(ps, max_n=req.max_enum)
    shown = matchings if req.limit is None else matchings[: req.limit]
    return schemas.EnumerateResponse(
        count=len(matchings),
        matchings=[list(m.pairs) for m in shown],
    )


@app.post("/witness", response_model=schemas.WitnessResponse)
def witness(req: schemas.WitnessRequest) -> schemas.WitnessResponse:
    ps = _point_set(req.points)
    result = build_witness(ps)
    if not result.found:
        return schemas.WitnessResponse(found=False, reason=result.reason)
    trace = None
    if req.include_trace:
        t = result.trace
        trace = schemas.TraceModel(
            case_tag=t.case_tag,
            piercing_pair=t.piercing_pair,
            q=t.q,
            j0=t.j0,
            delta=t.delta,
            r=t.r,
            r_prime=t.r_prime,
            s1=list(t.s1) if t.s1 is not None else None,
            s2=list(t.s2) if t.s2 is not None else None,
        )
    return schemas.WitnessResponse(
        found=True, matching=list(result.matching.pairs), trace=trace
    )


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify_(req: schemas.PointSetPayload) -> schemas.ClassifyResponse:
    return schemas.ClassifyResponse(classification=classify(_point_set(req.points)))


@app.post("/verify", response_model=schemas.ReportModel)
def verify(req: schemas.VerifyRequest) -> schemas.ReportModel:
    report = verify_main_theorem(_point_set(req.points), max_enum=req.max_enum)
    return schemas.ReportModel(**report_to_dict(report))


@app.post("/generate", response_model=schemas.GenerateResponse)
def generate_(req: schemas.GenerateRequest) -> schemas.GenerateResponse:
    spec = GeneratorSpec(kind=req.kind, n=req.n, seed=req.seed, radius=req.radius)
    return schemas.GenerateResponse(points=list(generate(spec).coords()))


@app.post("/experiment", response_model=schemas.SummaryModel)
def experiment(req: schemas.ExperimentRequest) -> schemas.SummaryModel:
    summary = run_experiment(
        req.trials, req.n_min, req.n_max, req.seed, req.kinds,
        max_enum=req.max_enum,
    )
    return schemas.SummaryModel(**summary_to_dict(summary))


@app.post("/svg")
def svg(req: schemas.SvgRequest) -> Response:
    ps = _point_set(req.points)
    matching = None
    piercing = None
    if req.matching is not None:
        matching = Matching.of(req.matching)
        matching.validate(ps)
        if req.highlight:
            piercing = find_piercing_pair(matching, ps)
    elif req.highlight:
        result = build_witness(ps)
        if result.found:
            matching = result.matching
            piercing = result.trace.piercing_pair
    return Response(content=render_svg(ps, matching, piercing),
                    media_type="image/svg+xml")
