"""
HTTP API
"""

import pytest
from fastapi.testclient import TestClient

from main import app
from services.elimination import proportional
from services.parser_service import parse_dual_web
from tests.helpers import poly


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as test_client:
        yield test_client


def test_root_and_health(client):
    assert client.get("/").json() == {"message": "Webflat Service", "status": "running"}
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy", "service": "webflat"}


def test_web_flatness(client):
    response = client.post("/webs/flat", json={"web": "p^3+4*x*y*p-8*y^2"})
    assert response.status_code == 200
    assert response.json() == {"flat": True}
    response = client.post("/webs/flat", json={"form": "y^3*dx - x^3*dy"})
    assert response.json() == {"flat": True}


def test_web_curvature(client):
    response = client.post("/webs/curvature", json={"web": "p^3-4*y*p-4*x"})
    assert response.status_code == 200
    body = response.json()
    assert body["flat"] is False
    assert body["numerator"] and body["denominator"]


def test_form_or_web_is_required(client):
    assert client.post("/webs/flat", json={}).status_code == 422
    both = {"form": "y^3*dx - x^3*dy", "web": "p^3 - x"}
    assert client.post("/webs/flat", json=both).status_code == 422


def test_legendre_in_the_second_chart(client):
    response = client.post("/foliations/legendre", json={"form": "y^3*dx - x^3*dy", "chart": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["chart"] == 2 and body["order"] == 3
    assert body["base"] == ["p", "q"] and body["fiber"] == "w"
    web = parse_dual_web(body["equation"])
    assert proportional(web.F, poly("p*w^3 - q", web.F.ring.names))


def test_chart_is_validated(client):
    response = client.post("/foliations/legendre", json={"form": "y^3*dx - x^3*dy", "chart": 4})
    assert response.status_code == 422


def test_syntax_errors_are_bad_requests(client):
    response = client.post("/foliations/analyze", json={"form": "y^3*dx - $"})
    assert response.status_code == 400
    assert "$" in response.json()["detail"] or "unexpected" in response.json()["detail"]


def test_analyze(client):
    response = client.post("/foliations/analyze", json={"form": "(x^3-x)*dy - (y^3-y)*dx"})
    assert response.status_code == 200
    body = response.json()
    assert body["degree"] == 3
    assert len(body["singularities"]) == 13
    assert body["convex"] is True
    assert len(body["invariant_lines"]) == 9
    assert len(body["inflection"]["inv"]) == 9 and body["inflection"]["tr"] == []
    point = body["singularities"][0]
    assert {"point", "nu", "tau", "milnor", "bb", "cs"} <= set(point)
    entries = [entry for s in body["singularities"] for entry in s["cs"]]
    assert entries and all(set(entry) == {"line", "value"} for entry in entries)


def test_homogeneous(client):
    form = "y^2*((-3+i*sqrt3)*x+2*y)*dx + x^2*((1+i*sqrt3)*x-2*i*sqrt3*y)*dy"
    response = client.post("/homogeneous/", json={"form": form})
    assert response.status_code == 200
    body = response.json()
    assert body["type"] == "3·R1+1·T1"
    assert body["convex"] is False
    assert body["flat_criterion"] is True
    assert {"C_H", "D_H", "type", "cs_polynomial", "flat_criterion"} <= set(body)


def test_non_homogeneous_input(client):
    response = client.post("/homogeneous/", json={"form": "(x^3 + 1)*dx + y^3*dy"})
    assert response.status_code == 422


def test_catalog_listing(client):
    primary = client.get("/catalog/", params={"include_aux": False}).json()
    assert len(primary) == 16
    assert primary[0]["id"] == "H1" and primary[0]["chart"] == 1
    assert len(client.get("/catalog/").json()) == 47


def test_fixture_verification(client):
    response = client.get("/catalog/H1/verify")
    assert response.status_code == 200
    assert response.json()["passed"] is True
    assert client.get("/catalog/H12/verify").status_code == 404
