import json

import pytest

from stockguard.cli import main


class TestRun:
    def test_writes_outputs(self, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(["run", "--scenario", "periodic", "--seed", "1",
                     "--out", str(out)])
        assert code == 0
        assert (out / "trajectory.csv").exists()
        assert (out / "metrics.json").exists()
        assert "service level" in capsys.readouterr().out

    def test_json_output(self, tmp_path, capsys):
        code = main(["run", "--scenario", "periodic", "--seed", "1",
                     "--out", str(tmp_path), "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["certified"] is True
        assert payload["metrics"]["service_level"] >= 0.95

    def test_missing_data_file(self, tmp_path, capsys):
        code = main(["run", "--scenario", "elec2", "--data",
                     str(tmp_path / "missing.csv"), "--out", str(tmp_path)])
        assert code == 2
        assert "missing.csv" in capsys.readouterr().err

    def test_unknown_scenario(self, tmp_path, capsys):
        code = main(["run", "--scenario", "nope", "--out", str(tmp_path)])
        assert code == 2
        assert "nope" in capsys.readouterr().err

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["run", "--scenario", "periodic", "--frobnicate", "1"])
        assert exc.value.code == 2


class TestConfigFile:
    def test_config_file_applies(self, tmp_path, capsys):
        cfg = tmp_path / "run.toml"
        cfg.write_text('scenario = "periodic"\nseed = 3\nT = 300\n')
        code = main(["run", "--config", str(cfg), "--out", str(tmp_path / "o"),
                     "--json"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["seed"] == 3

    def test_flag_overrides_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "run.toml"
        cfg.write_text('scenario = "periodic"\nseed = 3\n')
        code = main(["run", "--config", str(cfg), "--seed", "9",
                     "--out", str(tmp_path / "o"), "--json"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["seed"] == 9

    def test_unknown_key_named(self, tmp_path, capsys):
        cfg = tmp_path / "run.toml"
        cfg.write_text('scenario = "periodic"\nfrobnicate = 1\n')
        code = main(["run", "--config", str(cfg), "--out", str(tmp_path / "o")])
        assert code == 2
        assert "frobnicate" in capsys.readouterr().err


class TestCertify:
    def test_periodic_small_sweep(self, capsys):
        code = main(["certify", "--scenario", "periodic", "--seeds", "3",
                     "--serial"])
        out = capsys.readouterr().out
        assert code == 0
        assert "min service level" in out and "certified" in out

    def test_parallel_pool(self, capsys):
        code = main(["certify", "--scenario", "periodic", "--seeds", "2"])
        assert code == 0

    def test_negative_control_fails(self, capsys):
        # the uncertified policy against the adversary must be caught
        code = main(["certify", "--scenario", "adversarial", "--policy",
                     "uncertified", "--seeds", "2", "--serial"])
        assert code == 1
        assert "VIOLATION" in capsys.readouterr().out

    def test_json_lists_every_seed(self, capsys):
        code = main(["certify", "--scenario", "periodic", "--seeds", "2",
                     "--serial", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert [r["seed"] for r in payload["runs"]] == [0, 1]


class TestListScenarios:
    def test_text_listing(self, capsys):
        assert main(["list-scenarios"]) == 0
        out = capsys.readouterr().out
        for name in ("periodic", "sir", "feedback", "elec2"):
            assert name in out
        assert "requires --data" in out

    def test_json_listing(self, capsys):
        assert main(["list-scenarios", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        names = {item["name"] for item in payload}
        assert {"periodic", "sir", "feedback", "elec2"} <= names
        elec2 = next(i for i in payload if i["name"] == "elec2")
        assert elec2["requires_data"] is True
