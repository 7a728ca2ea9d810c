import time
import uuid

from vknots.metrics import http_request_duration_seconds, http_requests_total


def _record(request, status: str, duration: float) -> None:
    labels = {"method": request.method, "path": request.url.path, "status": status}
    http_requests_total.labels(**labels).inc()
    http_request_duration_seconds.labels(**labels).observe(duration)


async def request_id_and_metrics_middleware(request, call_next):
    start = time.perf_counter()
    request_id = request.headers.get("x-request-id") or str(uuid.uuid4())
    request.state.request_id = request_id
    try:
        response = await call_next(request)
    except Exception:
        _record(request, "500", time.perf_counter() - start)
        raise
    _record(request, str(response.status_code), time.perf_counter() - start)
    response.headers["x-request-id"] = request_id
    return response
