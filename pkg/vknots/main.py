import logging
import time
import uuid

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from vknots import __version__
from vknots.errors import GaussCodeError, KnotError, MoveError, SizeLimitError
from vknots.metrics import CONTENT_TYPE_LATEST, generate_latest, registry
from vknots.middleware.logging import request_logging_middleware
from vknots.middleware.request_id import request_id_and_metrics_middleware
from vknots.routers.health import router as health_router
from vknots.routers.invariants import router as invariants_router

app = FastAPI(title="virtual_knots", version=__version__)
app.state.start_time = time.time()


# Later registrations wrap earlier ones; the request id is set before logging runs.
@app.middleware("http")
async def _request_logging(request, call_next):
    return await request_logging_middleware(request, call_next)


@app.middleware("http")
async def _request_id_and_metrics(request, call_next):
    return await request_id_and_metrics_middleware(request, call_next)


def _error_response(request: Request, status: int, error: str, detail=None):
    request_id = getattr(request.state, "request_id", str(uuid.uuid4()))
    content = {"error": error, "request_id": request_id}
    if detail is not None:
        content["detail"] = detail
    return JSONResponse(
        status_code=status, content=content, headers={"x-request-id": request_id}
    )


@app.exception_handler(KnotError)
async def knot_error_handler(request: Request, exc: KnotError):
    if isinstance(exc, GaussCodeError):
        return _error_response(request, 400, "Invalid Gauss Code", str(exc))
    if isinstance(exc, MoveError):
        return _error_response(request, 400, "Invalid Move", str(exc))
    if isinstance(exc, SizeLimitError):
        return _error_response(request, 413, "Diagram Too Large", str(exc))
    return _error_response(request, 422, type(exc).__name__, str(exc))


@app.exception_handler(Exception)
async def unhandled_exception_handler(request: Request, exc: Exception):
    request_id = getattr(request.state, "request_id", "-")
    logging.getLogger("vknots.errors").exception(
        "unhandled_exception rid=%s path=%s method=%s",
        request_id,
        request.url.path,
        request.method,
    )
    return _error_response(request, 500, "Internal Server Error")


@app.get("/metrics")
async def metrics() -> Response:
    return Response(generate_latest(registry), media_type=CONTENT_TYPE_LATEST)


app.include_router(health_router)
app.include_router(invariants_router)
