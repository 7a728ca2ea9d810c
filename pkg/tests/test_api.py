from fastapi.testclient import TestClient
from vknots.main import app

client = TestClient(app)


def test_invariants_endpoint():
    r = client.post("/v1/invariants", json={"code": "U1-O2+U3+O1-O3+U2+"})
    assert r.status_code == 200
    body = r.json()
    assert body["code"] == "U1-O2+U3+O1-O3+U2+"
    assert body["chords"] == 3
    assert body["indices"][0] == {
        "chord": 1,
        "sign": -1,
        "ro": -1,
        "ru": 1,
        "lo": -1,
        "lu": 1,
        "ind": 0,
    }
    assert body["alexander"]["delta0_bar"]["text"] == "1"
    assert body["writhe"]["w"]["text"] == "-2 + t^-1 + t"
    assert body["writhe"]["w"]["terms"] == [[-1, 1], [0, -2], [1, 1]]
    assert body["v"]["v_rep"]["text"] == "1 - t"
    assert body["bounds"] == {
        "vc_lower": 1,
        "forbidden_lower_w": 1,
        "forbidden_one_excluded": "inconclusive",
    }


def test_verify_endpoint():
    r = client.post("/v1/verify", json={"code": "O1-O2-U1-U2-O3+O4+U3+U4+"})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert body["checks"]["bridge_v"] is True
    assert body["skipped"] == []


def test_mutants_endpoint():
    r = client.get("/v1/mutants/1")
    assert r.status_code == 200
    body = r.json()
    assert body["v_knot"]["text"] == "8 - 4*t^-1 - t - 3*t^2"
    assert body["v_mutant"]["text"] == "7 - 4*t^-1 + t - 4*t^2"
    assert body["difference_is_multiple"] is False


def test_mutants_endpoint_validates_k():
    assert client.get("/v1/mutants/0").status_code == 422
