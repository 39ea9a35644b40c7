import pytest
from fastapi.testclient import TestClient

from api.v1.errors import to_http_error

from config.fixtures import get_fixture
from config.settings import settings
from conftest import K4_MINUS_EDGE
from main import app
from models import Diagnostics
from services.errors import GeneratorError, OracleLimitError, RotationFormatError, SplitError, TriangulationError

API = settings.API_V1_STR


@pytest.fixture
def client():
    return TestClient(app)


def _post(client, path, document):
    return client.post(f"{API}/graphs/{path}", json={"document": document})


class TestService:
    def test_root(self, client):
        response = client.get("/")
        assert response.status_code == 200
        assert response.json()["message"] == f"Welcome to {settings.PROJECT_NAME}"
        assert response.json()["oracle_max_n"] == settings.ORACLE_MAX_N
        assert "octa_nested" in response.json()["fixtures"]

    def test_health(self, client):
        assert client.get("/health").json() == {"status": "healthy"}

    def test_process_time_header(self, client):
        assert float(client.get("/health").headers["X-Process-Time"]) >= 0.0


class TestGraphs:
    def test_validate_ok(self, client):
        response = _post(client, "validate", get_fixture("canon5"))
        assert response.status_code == 200
        assert response.json() == {"ok": True, "n": 5, "m": 9, "findings": []}

    def test_validate_reports_findings(self, client):
        body = _post(client, "validate", K4_MINUS_EDGE).json()
        assert body["ok"] is False
        assert [f["kind"] for f in body["findings"]] == ["non_triangular_face"]

    def test_triangles(self, client):
        body = _post(client, "triangles", get_fixture("canon7")).json()
        assert body["count"] == 2
        assert sorted(entry["corners"] for entry in body["triangles"]) == [[0, 1, 3], [0, 1, 4]]

    def test_order(self, client):
        body = _post(client, "order", get_fixture("canon5")).json()
        assert body["triangles"] == [
            {"position": 0, "corners": [0, 1, 2], "reference_edge": [0, 1], "internal_angle": 2, "time": 8}
        ]

    def test_decompose(self, client):
        body = _post(client, "decompose", get_fixture("canon7")).json()
        assert body["root"] == 2
        assert [c["parent"]["id"] if c["parent"] else None for c in body["components"]] == [1, 2, None]

    def test_verify(self, client):
        body = _post(client, "verify", get_fixture("canon7")).json()
        assert body["agreement"] is True
        assert body["differences"] == []
        assert body["components"] == 3

    def test_invalid_triangulation(self, client):
        response = _post(client, "decompose", K4_MINUS_EDGE)
        assert response.status_code == 422
        assert response.json()["detail"]["findings"][0].startswith("non_triangular_face")

    def test_malformed_document(self, client):
        response = _post(client, "triangles", "4 6\nouter 1 0\n0: 1 9\n")
        assert response.status_code == 400
        assert response.json()["detail"].startswith("Malformed rotation document")

    def test_empty_document(self, client):
        assert _post(client, "validate", "").status_code == 422

    def test_oracle_limit(self, client, monkeypatch):
        monkeypatch.setattr(settings, "ORACLE_MAX_N", 4)
        assert _post(client, "verify", get_fixture("canon5")).status_code == 400


class TestGenerators:
    def test_fixtures(self, client):
        body = client.get(f"{API}/generators/fixtures").json()
        assert [f["name"] for f in body[:5]] == ["triangle", "k4", "canon5", "canon7", "octa_nested"]
        assert body[2]["separating_triangles"] == 1

    def test_apollonian(self, client):
        body = client.get(f"{API}/generators/apollonian", params={"n": 12, "seed": 3}).json()
        assert (body["n"], body["m"]) == (12, 30)
        assert body["spec"]["seed"] == 3
        assert _post(client, "validate", body["document"]).json()["ok"] is True

    def test_nested_chain(self, client):
        body = client.get(f"{API}/generators/nested-chain", params={"k": 2}).json()
        assert body["n"] == 6

    def test_flipped(self, client):
        body = client.get(f"{API}/generators/flipped", params={"n": 14, "seed": 5, "flips": 10}).json()
        assert (body["n"], body["m"]) == (14, 36)
        assert body["spec"]["flips"] == 10
        assert _post(client, "verify", body["document"]).json()["agreement"] is True

    def test_missing_size(self, client):
        assert client.get(f"{API}/generators/apollonian").status_code == 400

    def test_unknown_kind(self, client):
        assert client.get(f"{API}/generators/grid").status_code == 422


class TestErrorMapping:
    @pytest.mark.parametrize(
        "error, code",
        [
            (RotationFormatError("bad header", 1), 400),
            (OracleLimitError("too large"), 400),
            (GeneratorError("unknown kind"), 400),
            (SplitError("reference edge missing"), 500),
        ],
    )
    def test_status_codes(self, error, code):
        assert to_http_error(error, "Test").status_code == code

    def test_invalid_triangulation_lists_findings(self):
        exc = to_http_error(TriangulationError(Diagnostics()), "Test")
        assert exc.status_code == 422
        assert exc.detail["findings"] == []
