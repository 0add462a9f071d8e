"""FastAPI application wrapping the solver pipeline."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import models, ops

app = FastAPI(
    title="chordalelim",
    description="Eliminate variables and solve sparse polynomial systems "
                "by exploiting chordal graph structure.",
    version="0.1.0",
)


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/eliminate", response_model=models.RunResponse)
def eliminate(req: models.EliminateRequest):
    return ops.eliminate(req)


@app.post("/cliques", response_model=models.RunResponse)
def cliques(req: models.SystemRequest):
    return ops.clique_eliminate(req)


@app.post("/solve", response_model=models.RunResponse)
def solve(req: models.SolveRequest):
    return ops.solve(req)


@app.post("/count", response_model=models.RunResponse)
def count(req: models.SystemRequest):
    return ops.solve(models.SolveRequest(**req.model_dump(), count_only=True))


@app.post("/graph-info", response_model=models.GraphInfoResponse)
def graph_info(req: models.GraphInfoRequest):
    return ops.graph_info(req)


@app.post("/generate/colorings", response_model=models.GenerateResponse)
def generate_colorings(req: models.GenColoringsRequest):
    return ops.generate_colorings(req)


@app.post("/generate/subsetsum", response_model=models.GenerateResponse)
def generate_subsetsum(req: models.GenSubsetSumRequest):
    return ops.generate_subset_sum(req)


@app.post("/generate/diffeq", response_model=models.GenerateResponse)
def generate_diffeq(req: models.GenDiffeqRequest):
    return ops.generate_diffeq(req)
