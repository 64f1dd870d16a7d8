"""HTTP facade: submit jobs, poll progress, fetch reports, browse the data.

All bodies are JSON; errors come back as {code, message}.  Configuration:
TRIZ_ENGINE_DATA_DIR for the document root, TRIZ_ENGINE_PORT for serving,
and the gateway's TRIZ_ENGINE_LLM_* variables for model access.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from ..errors import (
    EmptyCell,
    IndexOutOfRange,
    NotFound,
    QueueFull,
    TrizEngineError,
    UnknownPrinciple,
    ValidationError,
)
from ..evaluation import load_case_base
from ..gateway import Gateway, ProviderConfig
from ..kb import load_knowledge_base
from .jobs import JobExecutor
from .store import DocumentStore

ENV_DATA_DIR = "TRIZ_ENGINE_DATA_DIR"
ENV_PORT = "TRIZ_ENGINE_PORT"

_ERROR_STATUS = {
    ValidationError: 400,
    IndexOutOfRange: 400,
    EmptyCell: 404,
    UnknownPrinciple: 500,
    NotFound: 404,
    QueueFull: 503,
}

_ERROR_CODE = {
    ValidationError: "validation_error",
    IndexOutOfRange: "index_out_of_range",
    EmptyCell: "empty_cell",
    UnknownPrinciple: "unknown_principle",
    NotFound: "not_found",
    QueueFull: "queue_full",
}


def create_app(data_dir: str | Path | None = None, kb=None, gateway=None,
               case_dir=None, frontend_dir: str | Path | None = None) -> FastAPI:
    data_root = Path(data_dir or os.environ.get(ENV_DATA_DIR, "triz-data"))
    kb = kb or load_knowledge_base()
    gateway = gateway or Gateway(ProviderConfig.from_env())
    store = DocumentStore(data_root)
    executor = JobExecutor(store, kb, gateway, case_dir=case_dir)

    app = FastAPI(title="triz-engine", version="0.1.0")
    app.state.store = store
    app.state.executor = executor
    app.state.kb = kb

    @app.exception_handler(TrizEngineError)
    async def engine_error(request: Request, exc: TrizEngineError):
        status = _ERROR_STATUS.get(type(exc), 500)
        code = _ERROR_CODE.get(type(exc), "engine_error")
        return JSONResponse(status_code=status,
                            content={"code": code, "message": str(exc)})

    @app.post("/api/jobs", status_code=201)
    async def submit_job(request: Request):
        body = await request.json()
        if not isinstance(body, dict):
            raise ValidationError("request body must be a JSON object")
        job_id = executor.submit(body)
        return {"id": job_id}

    @app.get("/api/jobs/{job_id}")
    async def get_job(job_id: str):
        return executor.get(job_id)

    @app.get("/api/reports/{report_id}")
    async def get_report(report_id: str, format: str = "json"):
        if format == "json":
            return store.read("reports", report_id)
        if format in ("md", "markdown"):
            return PlainTextResponse(store.read_text("reports", report_id, ".md"),
                                     media_type="text/markdown")
        if format in ("tex", "latex"):
            return PlainTextResponse(store.read_text("reports", report_id, ".tex"),
                                     media_type="application/x-tex")
        raise ValidationError("format must be json, md, or tex")

    @app.get("/api/kb/parameters")
    async def kb_parameters():
        return [{"index": p.index, "title": p.title, "description": p.description}
                for p in kb.parameters]

    @app.get("/api/kb/principles")
    async def kb_principles():
        return [{"index": p.index, "title": p.title, "description": p.description}
                for p in kb.principles]

    @app.get("/api/kb/matrix/{improving}/{worsening}")
    async def kb_matrix_cell(improving: int, worsening: int):
        principles = kb.lookup(improving, worsening)
        return {
            "improving": improving,
            "worsening": worsening,
            "principles": [{"index": p.index, "title": p.title,
                            "description": p.description} for p in principles],
        }

    @app.get("/api/cases")
    async def cases():
        return [{
            "id": c.id,
            "domain": c.domain,
            "problem_statement": c.problem_statement,
            "reference_contradiction": {"improving": c.reference_contradiction.improving,
                                        "worsening": c.reference_contradiction.worsening},
            "reference_principles": list(c.reference_principles),
            "source": c.source,
        } for c in load_case_base(case_dir)]

    @app.get("/api/eval/{case_id}")
    async def evaluation(case_id: str):
        return store.read("eval", case_id)

    if frontend_dir and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(frontend_dir), html=True),
                  name="frontend")

    return app


def serve(app: FastAPI | None = None, host: str = "127.0.0.1",
          port: int | None = None):
    import uvicorn
    uvicorn.run(app or create_app(), host=host,
                port=port or int(os.environ.get(ENV_PORT, "8763")))
