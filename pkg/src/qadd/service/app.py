"""HTTP front end: one POST endpoint per command, plus a health probe.

Run with::

    uvicorn qadd.service.app:app

Domain errors map to HTTP 400 with ``{"error": {"type", "message"}}``;
request-shape problems are FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import QaddError
from ..statevec import max_qubits
from . import handlers
from .schemas import (
    AddRequest,
    AddResponse,
    DumpRequest,
    DumpResponse,
    ErrorResponse,
    HealthResponse,
    ScheduleRequest,
    ScheduleResponse,
    StatsRequest,
    StatsResponse,
    VerifyRequest,
    VerifyResponse,
)

_ERROR_RESPONSES = {400: {"model": ErrorResponse}}


def create_app() -> FastAPI:
    app = FastAPI(
        title="qadd",
        version=__version__,
        description="Quantum addition circuits: build, simulate, verify, schedule.",
    )

    @app.exception_handler(QaddError)
    async def _domain_error(_request: Request, exc: QaddError) -> JSONResponse:
        body = ErrorResponse.model_validate(
            {"error": {"type": type(exc).__name__, "message": str(exc)}}
        )
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.exception_handler(ValueError)
    async def _value_error(_request: Request, exc: ValueError) -> JSONResponse:
        body = ErrorResponse.model_validate(
            {"error": {"type": "ValueError", "message": str(exc)}}
        )
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(version=__version__, max_qubits=max_qubits())

    @app.post("/add", response_model=AddResponse, responses=_ERROR_RESPONSES)
    async def add(req: AddRequest) -> AddResponse:
        return handlers.handle_add(req)

    @app.post("/verify", response_model=VerifyResponse, responses=_ERROR_RESPONSES)
    async def verify(req: VerifyRequest) -> VerifyResponse:
        return handlers.handle_verify(req)

    @app.post("/stats", response_model=StatsResponse, responses=_ERROR_RESPONSES)
    async def stats(req: StatsRequest) -> StatsResponse:
        return handlers.handle_stats(req)

    @app.post("/schedule", response_model=ScheduleResponse, responses=_ERROR_RESPONSES)
    async def schedule(req: ScheduleRequest) -> ScheduleResponse:
        return handlers.handle_schedule(req)

    @app.post("/dump", response_model=DumpResponse, responses=_ERROR_RESPONSES)
    async def dump(req: DumpRequest) -> DumpResponse:
        return handlers.handle_dump(req)

    return app


app = create_app()
