from fastapi.testclient import TestClient
from vknots.main import app

client = TestClient(app)


def test_metrics_endpoint_available():
    r = client.get("/metrics")
    assert r.status_code == 200
    assert r.headers.get("content-type", "").startswith("text/plain")
    assert b"http_requests_total" in r.content


def test_invariant_computations_are_counted():
    client.post("/v1/invariants", json={"code": "U1-O2+U3+O1-O3+U2+"})
    body = client.get("/metrics").text
    assert 'invariant_computations_total{operation="alexander_suite",outcome="success"}' in body
    assert 'http_requests_total{method="POST",path="/v1/invariants",status="200"}' in body
