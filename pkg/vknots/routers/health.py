from fastapi import APIRouter, Request
import os
import time

router = APIRouter()


def _flag(name: str) -> bool:
    return os.getenv(name, "false").lower() in {"1", "true", "yes"}


@router.get("/healthz")
async def healthz(request: Request):
    start_time = getattr(request.app.state, "start_time", None)
    uptime_seconds = time.time() - start_time if start_time else None

    return {
        "status": "ok",
        "uptime_seconds": uptime_seconds,
        "version": os.getenv("APP_VERSION") or "1.0",
        "limits": {
            "oracle_max_chords": int(
                os.getenv("VKNOTS_ORACLE_MAX_CHORDS", "12") or 12
            ),
            "brute_force_max_size": int(
                os.getenv("VKNOTS_BRUTE_FORCE_MAX_SIZE", "12") or 12
            ),
        },
        "logging": {
            "enabled": _flag("VKNOTS_LOG_REQUESTS"),
            "level": os.getenv("VKNOTS_LOG_LEVEL", "INFO").upper(),
        },
        "batch": {
            "seed": int(os.getenv("VKNOTS_SEED", "0") or 0),
            "workers": int(os.getenv("VKNOTS_WORKERS", "1") or 1),
        },
    }
