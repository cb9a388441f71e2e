import json
from pathlib import Path

import pytest
from cantorlab import ConfigException
from cantorlab.cli import COMMANDS, SUMMARY_FILE, ExitCode, ExperimentConfig, run_suite
from cantorlab.core.settings import Settings
from cantorlab.measures import measure_from_spec


def _write(path: Path, data: object) -> None:
    path.write_text(json.dumps(data), encoding="utf-8")


class TestSuite:
    # =================================
    # Test Cases for suites
    # =================================

    def test_missing_directory(self, tmp_path: Path) -> None:
        # Arrange/Act/Assert
        with pytest.raises(ConfigException):
            run_suite(tmp_path / "missing", tmp_path / "out")

    # =================================

    def test_empty_directory(self, tmp_path: Path) -> None:
        # Arrange
        (tmp_path / "configs").mkdir()

        # Act
        code = run_suite(tmp_path / "configs", tmp_path / "out", Settings())

        # Assert
        assert code is ExitCode.OK
        summary = json.loads((tmp_path / "out" / SUMMARY_FILE).read_text(encoding="utf-8"))
        assert summary == {"command": "suite", "ok": True, "violations": [], "experiments": []}

    # =================================

    def test_worst_code_wins(self, tmp_path: Path) -> None:
        # Arrange
        configs = tmp_path / "configs"
        configs.mkdir()
        _write(configs / "a_valid.json", {"command": "validate", "measure": "uniform", "depth": 1, "seed": 2})
        _write(
            configs / "b_perturbed.json",
            {
                "command": "validate",
                "measure": {"kind": "perturbed", "inner": "uniform", "rect": "[0]x[1]", "delta": "1/64"},
                "depth": 2,
            },
        )
        (configs / "notes.txt").write_text("not a config", encoding="utf-8")

        # Act
        code = run_suite(configs, tmp_path / "out", Settings(), max_workers=2)

        # Assert
        assert code is ExitCode.VIOLATED
        summary = json.loads((tmp_path / "out" / SUMMARY_FILE).read_text(encoding="utf-8"))
        assert summary["ok"] is False
        assert summary["experiments"] == [
            {"name": "a_valid", "command": "validate", "code": 0, "seed": 2},
            {"name": "b_perturbed", "command": "validate", "code": 1, "seed": 0},
        ]
        assert all(v.startswith("b_perturbed: ") for v in summary["violations"])
        assert (tmp_path / "out" / "a_valid" / "validation.json").exists()

    # =================================

    def test_config_error_outranks_violations(self, tmp_path: Path) -> None:
        # Arrange
        configs = tmp_path / "configs"
        configs.mkdir()
        _write(
            configs / "perturbed.json",
            {
                "command": "validate",
                "measure": {"kind": "perturbed", "inner": "uniform", "rect": "*x*", "delta": "1"},
                "depth": 1,
            },
        )
        (configs / "broken.json").write_text("{", encoding="utf-8")

        # Act
        code = run_suite(configs, tmp_path / "out", Settings())

        # Assert
        assert code is ExitCode.CONFIG
        summary = json.loads((tmp_path / "out" / SUMMARY_FILE).read_text(encoding="utf-8"))
        assert {"name": "broken", "command": "unknown", "code": 2, "seed": None} in summary["experiments"]

    # =================================
    # Test Cases for the acceptance configs
    # =================================

    def test_acceptance_configs_are_valid(self) -> None:
        # Arrange
        configdir = Path(__file__).parents[3] / "configs"

        # Act
        configs = [ExperimentConfig.from_file(path) for path in sorted(configdir.glob("*.json"))]

        # Assert
        assert {c.command for c in configs} == set(COMMANDS)
        for config in configs:
            if "measure" in config.params:
                measure_from_spec(config.params["measure"])
        trims = [c for c in configs if c.command == "trim" and "covers" in c.params]
        assert all(len(c.params["covers"]) == 4 and c.params["trials"] == 200 for c in trims)
        assert any(c.params.get("scenario") == "coverage" for c in configs)
