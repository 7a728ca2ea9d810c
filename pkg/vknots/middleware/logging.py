import logging
import os
import time

from vknots.log import attach_handler

LOG_REQUESTS = os.getenv("VKNOTS_LOG_REQUESTS", "false").lower() in {"1", "true", "yes"}
LOG_LEVEL = os.getenv("VKNOTS_LOG_LEVEL", "INFO").upper()
_logger = logging.getLogger("vknots.request")
if LOG_REQUESTS:
    attach_handler(_logger, LOG_LEVEL)


async def request_logging_middleware(request, call_next):
    if not LOG_REQUESTS:
        return await call_next(request)
    start = time.perf_counter()
    rid = getattr(request.state, "request_id", request.headers.get("x-request-id") or "-")
    if _logger.isEnabledFor(logging.DEBUG):
        _logger.debug(
            "incoming rid=%s method=%s path=%s content_length=%s",
            rid,
            request.method,
            request.url.path,
            request.headers.get("content-length"),
        )

    response = await call_next(request)
    duration_ms = (time.perf_counter() - start) * 1000.0
    _logger.info(
        "rid=%s method=%s path=%s status=%s duration_ms=%.2f client=%s",
        rid,
        request.method,
        request.url.path,
        response.status_code,
        duration_ms,
        request.client.host if request.client else "",
    )
    return response
