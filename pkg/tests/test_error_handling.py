from fastapi.testclient import TestClient

from vknots.errors import KnotError, SizeLimitError
from vknots.main import app

client = TestClient(app, raise_server_exceptions=False)


def test_bad_gauss_code_is_400():
    r = client.post("/v1/invariants", json={"code": "O1+O1+"})
    assert r.status_code == 400
    body = r.json()
    assert body["error"] == "Invalid Gauss Code"
    assert "two O" in body["detail"]
    assert body["request_id"] == r.headers["x-request-id"]


def test_missing_code_field_is_422():
    r = client.post("/v1/invariants", json={})
    assert r.status_code == 422


def test_size_limit_is_413(monkeypatch):
    from vknots.routers import invariants as router

    def too_large(d):
        raise SizeLimitError("diagram too large")

    monkeypatch.setattr(router, "summarize", too_large)
    r = client.post("/v1/invariants", json={"code": "U1-O2+U3+O1-O3+U2+"})
    assert r.status_code == 413
    assert r.json()["error"] == "Diagram Too Large"


def test_other_knot_errors_are_422(monkeypatch):
    from vknots.routers import invariants as router

    def fail(d):
        raise KnotError("no")

    monkeypatch.setattr(router, "summarize", fail)
    r = client.post("/v1/invariants", json={"code": "O1+U1+"})
    assert r.status_code == 422
    assert r.json()["error"] == "KnotError"


def test_unhandled_exception_returns_500_with_request_id(monkeypatch):
    from vknots.routers import invariants as router

    def boom(d):
        raise RuntimeError("boom")

    monkeypatch.setattr(router, "summarize", boom)
    r = client.post("/v1/invariants", json={"code": "O1+U1+"})
    assert r.status_code == 500
    rid = r.headers["x-request-id"]
    assert rid
    body = r.json()
    assert body.get("error") == "Internal Server Error"
    assert body.get("request_id") == rid
