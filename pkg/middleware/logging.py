import time
import logging
from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware

logger = logging.getLogger(__name__)


class LoggingMiddleware(BaseHTTPMiddleware):
    """Logs method, URL, status and elapsed time; sets X-Process-Time"""

    async def dispatch(self, request: Request, call_next):
        start_time = time.perf_counter()
        logger.info(f"Request: {request.method} {request.url.path}")

        try:
            response = await call_next(request)
        except Exception as e:
            process_time = time.perf_counter() - start_time
            logger.error(
                f"Error: {request.method} {request.url.path} - "
                f"{type(e).__name__}: {e} - "
                f"Time: {process_time:.4f}s"
            )
            raise

        process_time = time.perf_counter() - start_time
        logger.info(
            f"Response: {request.method} {request.url.path} - "
            f"Status: {response.status_code} - "
            f"Time: {process_time:.4f}s"
        )
        response.headers["X-Process-Time"] = f"{process_time:.6f}"
        return response
