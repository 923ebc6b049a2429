import pytest
from fastapi.testclient import TestClient

from stockguard.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestEndpoints:
    def test_health(self, client):
        assert client.get("/health").json() == {"status": "ok"}

    def test_scenarios_listing(self, client):
        items = client.get("/scenarios").json()
        names = {i["name"] for i in items}
        assert {"periodic", "sir", "feedback", "adversarial", "elec2"} <= names
        elec2 = next(i for i in items if i["name"] == "elec2")
        assert elec2["requires_data"]
        assert elec2["defaults"]["T"] == 4032

    def test_run(self, client):
        r = client.post("/run", json={"scenario": "periodic", "seed": 0})
        assert r.status_code == 200
        body = r.json()
        assert body["certified"] is True
        assert body["metrics"]["service_level"] >= 0.95
        assert body["metrics"]["coverage"] >= 0.95
        assert body["trajectory"] is None

    def test_run_with_trajectory(self, client):
        r = client.post(
            "/run",
            json={"scenario": "periodic", "seed": 0, "include_trajectory": True},
        )
        rows = r.json()["trajectory"]
        assert len(rows) == 301
        assert rows[0]["t"] == 0 and rows[-1]["t"] == 300

    def test_run_writes_files(self, client, tmp_path):
        out = tmp_path / "svc"
        r = client.post(
            "/run", json={"scenario": "sir", "seed": 1, "out_dir": str(out)}
        )
        assert r.status_code == 200
        assert (out / "trajectory.csv").exists()
        assert (out / "metrics.json").exists()

    def test_run_matches_cli_results(self, client, tmp_path, capsys):
        # thin-client property: HTTP and CLI produce identical metrics
        import json as jsonlib

        from stockguard.cli import main

        main(["run", "--scenario", "periodic", "--seed", "5",
              "--out", str(tmp_path), "--json"])
        cli_metrics = jsonlib.loads(capsys.readouterr().out)["metrics"]
        http_metrics = client.post(
            "/run", json={"scenario": "periodic", "seed": 5}
        ).json()["metrics"]
        assert cli_metrics == http_metrics

    def test_unknown_scenario_404(self, client):
        assert client.post("/run", json={"scenario": "nope"}).status_code == 404

    def test_unknown_field_422(self, client):
        r = client.post("/run", json={"scenario": "periodic", "bogus": 1})
        assert r.status_code == 422

    def test_invalid_override_400(self, client):
        r = client.post(
            "/run",
            json={"scenario": "periodic", "overrides": {"alpha": 0.001}},
        )
        assert r.status_code == 400
        assert "alpha" in r.json()["detail"]

    def test_elec2_without_data_400(self, client):
        r = client.post("/run", json={"scenario": "elec2"})
        assert r.status_code == 400

    def test_certify(self, client):
        r = client.post("/certify", json={"scenario": "feedback", "seeds": 2})
        assert r.status_code == 200
        body = r.json()
        assert body["certified"] is True
        assert body["min_service_level"] >= body["target_service_level"]
        assert len(body["runs"]) == 2

    def test_certify_negative_control(self, client):
        r = client.post(
            "/certify",
            json={"scenario": "adversarial", "seeds": 2, "policy": "uncertified"},
        )
        assert r.status_code == 200
        assert r.json()["certified"] is False
