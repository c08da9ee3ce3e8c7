import pytest
from fastapi.testclient import TestClient

from padic_hyper.main import create_app


@pytest.fixture
def client():
    return TestClient(create_app())


def test_teich(client):
    response = client.post("/teich", json={"p": 5, "prec": 2, "x": 2})
    assert response.status_code == 200
    assert response.json() == {"value": 7}


def test_ngn(client):
    payload = {"p": 3, "prec": 3, "a": ["1/2"] * 4, "b": ["1"] * 4, "s": 1}
    response = client.post("/ngn", json=payload)
    assert response.status_code == 200
    assert response.json()["value"] == "3^0 * 26 mod 3^3"


def test_fseries(client):
    payload = {"p": 3, "prec": 3, "upper": ["1/2", "1/2", "1/4", "3/4"], "lower": ["1", "1", "1"]}
    response = client.post("/fseries", json=payload)
    assert response.json() == {"value": 4}


def test_gamma_matches_cli_service(client):
    response = client.post("/gamma", json={"p": 5, "prec": 3, "arg": "0"})
    assert response.json() == {"value": "5^0 * 1 mod 5^3"}


def test_library_errors_are_bad_requests(client):
    response = client.post("/gamma", json={"p": 5, "prec": 2, "arg": "1/5"})
    assert response.status_code == 400
    assert "DenominatorDivisibleByP" in response.json()["detail"]
    response = client.post("/jacobi", json={"p": 5, "prec": 2, "j1": 0, "j2": 0})
    assert response.status_code == 400


def test_coef(client):
    assert client.get("/coef/f2/3").json() == {"form": "f2", "n": 3, "value": 4}
    assert client.get("/coef/f1/5000").status_code == 400
    assert client.get("/coef/h/3").status_code == 422


def test_identities(client):
    ids = [entry["id"] for entry in client.get("/identities").json()["identities"]]
    assert ids[0] == "gamma-reflection"
    assert "eta-hecke" in ids


def test_verify(client):
    response = client.post("/verify", json={"id": "s-sign", "p_min": 3, "p_max": 7, "prec": 3})
    body = response.json()
    assert response.status_code == 200
    assert body["failures"] == 0
    assert len(body["records"]) == 6
    assert body["summary"]["s-sign"]["pass"] == 6


def test_verify_unknown_identity(client):
    response = client.post("/verify", json={"id": "no-such-identity"})
    assert response.status_code == 404


def test_composite_p_is_a_bad_request(client):
    response = client.post("/gamma", json={"p": 9, "prec": 2, "arg": "1/2"})
    assert response.status_code == 400
    assert "odd prime" in response.json()["detail"]


def test_teich_of_zero_is_a_bad_request(client):
    response = client.post("/teich", json={"p": 5, "prec": 2, "x": 10})
    assert response.status_code == 400
    assert "ZeroArgument" in response.json()["detail"]
