import functools
import time

from prometheus_client import (
    Counter,
    Histogram,
    CollectorRegistry,
    CONTENT_TYPE_LATEST,
    generate_latest,
)

registry = CollectorRegistry()

http_requests_total = Counter(
    "http_requests_total",
    "Total HTTP requests",
    ["method", "path", "status"],
    registry=registry,
)

http_request_duration_seconds = Histogram(
    "http_request_duration_seconds",
    "HTTP request latency in seconds",
    ["method", "path", "status"],
    buckets=(0.005, 0.01, 0.025, 0.05, 0.1, 0.25, 0.5, 1, 2, 5),
    registry=registry,
)

# Invariant-level metrics
invariant_computations_total = Counter(
    "invariant_computations_total",
    "Total invariant computations by operation and outcome",
    ["operation", "outcome"],
    registry=registry,
)

invariant_computation_duration_seconds = Histogram(
    "invariant_computation_duration_seconds",
    "Invariant computation latency in seconds",
    ["operation", "outcome"],
    buckets=(0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1, 5, 10, 30),
    registry=registry,
)


def observe_computation(operation: str):
    """Count and time every call of the decorated function under ``operation``."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            outcome = "error"
            try:
                result = func(*args, **kwargs)
                outcome = "success"
                return result
            finally:
                duration = time.perf_counter() - start
                invariant_computations_total.labels(
                    operation=operation, outcome=outcome
                ).inc()
                invariant_computation_duration_seconds.labels(
                    operation=operation, outcome=outcome
                ).observe(duration)

        return wrapper

    return decorator


__all__ = [
    "registry",
    "http_requests_total",
    "http_request_duration_seconds",
    "invariant_computations_total",
    "invariant_computation_duration_seconds",
    "observe_computation",
    "CONTENT_TYPE_LATEST",
    "generate_latest",
]
