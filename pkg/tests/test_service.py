import pytest
from fastapi.testclient import TestClient

from planematch.service.app import app

from conftest import EXCEPTIONAL, G1


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


class TestCount:
    def test_exceptional(self, client):
        response = client.post("/count", json={"points": list(EXCEPTIONAL)})
        assert response.status_code == 200
        assert response.json() == {
            "n": 6, "k": 3, "pm": "5", "catalan_k": "5", "gnt": "5",
        }

    def test_cap(self, client):
        response = client.post(
            "/count", json={"points": list(G1), "max_enum": 4}
        )
        assert response.status_code == 422

    def test_collinear_rejected(self, client):
        response = client.post(
            "/count", json={"points": [[0, 0], [1, 1], [2, 2], [5, 0]]}
        )
        assert response.status_code == 422
        assert "collinear" in response.json()["detail"]

    def test_odd_size_rejected(self, client):
        response = client.post(
            "/count", json={"points": [[0, 0], [1, 0], [0, 1], [9, 2], [3, 7], [8, 5], [2, 1], [6, 9]][:3]}
        )
        assert response.status_code == 422


class TestEnumerate:
    def test_exceptional(self, client):
        response = client.post("/enumerate", json={"points": list(EXCEPTIONAL)})
        body = response.json()
        assert body["count"] == 5
        assert len(body["matchings"]) == 5

    def test_limit(self, client):
        response = client.post(
            "/enumerate", json={"points": list(EXCEPTIONAL), "limit": 2}
        )
        body = response.json()
        assert body["count"] == 5
        assert len(body["matchings"]) == 2


class TestWitness:
    def test_g1(self, client):
        response = client.post("/witness", json={"points": list(G1)})
        body = response.json()
        assert body["found"] is True
        assert body["trace"]["case_tag"] == "many_interior"
        assert len(body["matching"]) == 3

    def test_exceptional(self, client):
        response = client.post("/witness", json={"points": list(EXCEPTIONAL)})
        body = response.json()
        assert body == {"found": False, "reason": "exceptional_six",
                        "matching": None, "trace": None}

    def test_without_trace(self, client):
        response = client.post(
            "/witness", json={"points": list(G1), "include_trace": False}
        )
        assert response.json()["trace"] is None


def test_classify(client):
    response = client.post("/classify", json={"points": list(EXCEPTIONAL)})
    assert response.json() == {"classification": "exceptional_six"}


def test_verify(client):
    response = client.post("/verify", json={"points": list(G1)})
    body = response.json()
    assert body["consistent"] is True
    assert body["pm"] == "10"
    assert body["witness_found"] is True


class TestGenerate:
    def test_deterministic(self, client):
        payload = {"kind": "random_disk", "n": 8, "seed": 4, "radius": 2000}
        a = client.post("/generate", json=payload).json()
        b = client.post("/generate", json=payload).json()
        assert a == b

    def test_bad_kind(self, client):
        response = client.post("/generate", json={"kind": "spiral"})
        assert response.status_code == 422


def test_experiment(client):
    response = client.post(
        "/experiment",
        json={"trials": 4, "n_min": 4, "n_max": 6, "seed": 2,
              "kinds": ["random_disk"]},
    )
    body = response.json()
    assert body["trials"] == 4
    assert body["failures"] == []


class TestSvg:
    def test_media_type(self, client):
        response = client.post("/svg", json={"points": list(EXCEPTIONAL)})
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("image/svg+xml")
        assert response.text.count("<circle") == 6

    def test_highlight(self, client):
        response = client.post(
            "/svg", json={"points": list(G1), "highlight": True}
        )
        assert response.text.count("stroke-dasharray") == 1

    def test_explicit_matching(self, client):
        matching = [[0, 1], [2, 3], [4, 5]]
        response = client.post(
            "/svg", json={"points": list(G1), "matching": matching}
        )
        assert response.text.count('stroke="black" stroke-width="3"') == 3
