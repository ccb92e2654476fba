"""HTTP service exposing the cohomology computations.

Thin wrapper: pydantic models validate the request shape, the report builders
in reports.py do all the work, and responses are the report dicts verbatim.
Invalid mathematical configs (non-coprime pair, composite characteristic, bad
labels) map to HTTP 400.
"""

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import reports
from .reports import InvalidConfig, JobConfig

app = FastAPI(
    title="semigroup-hh",
    description="Exact Hochschild cohomology of numerical-semigroup "
                "hypersurfaces k[s^a, s^b] for coprime a, b.",
    version="1.0.0",
)


class WindowRequest(BaseModel):
    a: int = Field(ge=2)
    b: int = Field(ge=2)
    char: int = Field(default=0, ge=0)
    max_degree: int = Field(default=6, ge=0)
    weight_min: Optional[int] = None
    weight_max: Optional[int] = None

    def job(self):
        try:
            return JobConfig(self.a, self.b, self.char, self.max_degree,
                             self.weight_min, self.weight_max)
        except InvalidConfig as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc


class CupRequest(BaseModel):
    a: int = Field(ge=2)
    b: int = Field(ge=2)
    char: int = Field(default=0, ge=0)
    left: str
    right: str


class HilbertRequest(WindowRequest):
    variant: Literal["minus-a", "minus-b", "both"] = "both"


class Report(BaseModel):
    params: dict
    case: str
    results: object
    checks: dict


def _run(fn, *args):
    try:
        return fn(*args)
    except InvalidConfig as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/dim", response_model=Report)
def dim(req: WindowRequest):
    return _run(reports.run_dim, req.job())


@app.post("/basis", response_model=Report)
def basis(req: WindowRequest):
    return _run(reports.run_basis, req.job())


@app.post("/cup", response_model=Report)
def cup(req: CupRequest):
    try:
        cfg = JobConfig(req.a, req.b, req.char)
    except InvalidConfig as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return _run(reports.run_cup, cfg, req.left, req.right)


@app.post("/present", response_model=Report)
def present(req: WindowRequest):
    return _run(reports.run_present, req.job())


@app.post("/hilbert", response_model=Report)
def hilbert(req: HilbertRequest):
    return _run(reports.run_hilbert, req.job(), req.variant)


@app.post("/verify", response_model=Report)
def verify(req: WindowRequest):
    return _run(reports.run_verify, req.job())
