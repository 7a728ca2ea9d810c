import importlib

from fastapi.testclient import TestClient


def _reload_app():
    import vknots.main as main
    import vknots.middleware.logging as request_logging

    importlib.reload(request_logging)
    importlib.reload(main)
    return main


def test_logging_disabled_by_default(monkeypatch):
    monkeypatch.delenv("VKNOTS_LOG_REQUESTS", raising=False)
    main = _reload_app()
    assert not main.request_logging_middleware.__globals__["LOG_REQUESTS"]
    r = TestClient(main.app).get("/healthz")
    assert r.status_code == 200


def test_logging_enabled_path(monkeypatch):
    monkeypatch.setenv("VKNOTS_LOG_REQUESTS", "true")
    monkeypatch.setenv("VKNOTS_LOG_LEVEL", "DEBUG")
    main = _reload_app()
    assert main.request_logging_middleware.__globals__["LOG_REQUESTS"]
    r = TestClient(main.app).get("/healthz")
    assert r.status_code == 200
    monkeypatch.delenv("VKNOTS_LOG_REQUESTS")
    _reload_app()
