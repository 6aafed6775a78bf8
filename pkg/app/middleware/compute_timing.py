##app/middleware/compute_timing.py
import logging
import time
from typing import Callable, Optional

from fastapi import Request

from app.config import TIME_BUDGET

logger = logging.getLogger(__name__)


class ComputeTimingMiddleware:
    """
    Logs every request with its wall-clock time and stamps the response with
    an `X-Compute-Seconds` header.
    """

    def __init__(self, budget_seconds: Optional[float] = None):
        """
        Args:
            budget_seconds (float, optional): requests slower than this are logged
                                              as warnings. Defaults to HSC_TIME_BUDGET.
        """
        self.budget_seconds = TIME_BUDGET if budget_seconds is None else budget_seconds
        logger.info(f"ComputeTimingMiddleware initialized. Budget: {self.budget_seconds}s")

    async def __call__(self, request: Request, call_next: Callable):
        """
        FastAPI middleware implementation.
        """
        started = time.perf_counter()
        response = await call_next(request)
        elapsed = time.perf_counter() - started
        response.headers["X-Compute-Seconds"] = f"{elapsed:.4f}"

        if elapsed > self.budget_seconds:
            logger.warning(f"{request.method} {request.url.path} took {elapsed:.1f}s, over the {self.budget_seconds}s budget")
        else:
            logger.info(f"{request.method} {request.url.path} -> {response.status_code} in {elapsed:.3f}s")
        return response
