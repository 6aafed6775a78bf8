# backend/app/main.py - HTTP surface for codegree coefficients, Veblen classes and presets
import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
import uvicorn

from app.config import ENVIRONMENT, LOG_LEVEL
from app.exceptions import CapExceededError, HypergraphError, HypergraphParseError, InconsistencyError
from app.middleware.compute_timing import ComputeTimingMiddleware
from app.associated import coefficient_cache_size
from app.presets import preset_names

from app.routes import (
    coefficients_router,
    hypergraphs_router,
    polynomial_router,
    presets_router,
    simplex_router,
    veblen_router,
)

logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
logger = logging.getLogger(__name__)

app = FastAPI(title="Harary-Sachs codegree coefficients")

app.add_middleware(
    CORSMiddleware,
    allow_origins=[
        "http://localhost:5173",
        "http://127.0.0.1:5173",
        "http://localhost:3000",
        "http://127.0.0.1:3000",
    ],
    allow_credentials=True,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["*"],
)

timing = ComputeTimingMiddleware()
app.middleware("http")(timing)

app.include_router(hypergraphs_router)
app.include_router(coefficients_router)
app.include_router(simplex_router)
app.include_router(veblen_router)
app.include_router(polynomial_router)
app.include_router(presets_router)


def _error_body(exc: HypergraphError) -> dict:
    body = {"detail": str(exc), "error_type": type(exc).__name__}
    if isinstance(exc, HypergraphParseError):
        body["line"] = exc.line
        body["column"] = exc.column
    if isinstance(exc, CapExceededError):
        body["cap"] = exc.cap
        body["limit"] = str(exc.limit)
    return body


@app.exception_handler(HypergraphError)
async def hypergraph_error_handler(request: Request, exc: HypergraphError):
    """Bad input is a 400, an exhausted cap a 413, a failed exactness check a 500."""
    if isinstance(exc, InconsistencyError):
        logger.error(f"Inconsistency on {request.url.path}: {exc}")
        status_code = 500
    elif isinstance(exc, CapExceededError):
        logger.warning(f"Cap exceeded on {request.url.path}: {exc}")
        status_code = 413
    else:
        status_code = 400
    return JSONResponse(status_code=status_code, content=_error_body(exc))


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "environment": ENVIRONMENT,
        "presets": len(preset_names()),
        "cached_coefficients": coefficient_cache_size(),
        "time_budget": timing.budget_seconds,
    }


if __name__ == "__main__":
    uvicorn.run("app.main:app", host="0.0.0.0", port=8000, reload=True)
