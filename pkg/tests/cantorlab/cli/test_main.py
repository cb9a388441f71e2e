import json
from pathlib import Path

import pytest
from cantorlab.cli import SUMMARY_FILE, ExitCode, ExperimentConfig, build_parser, config_from_args, main


class TestMain:
    # =================================
    # Test Cases for argument parsing
    # =================================

    def test_config_from_args(self) -> None:
        # Arrange
        args = build_parser().parse_args(
            ["trace", "--measure", "staircase", "--depth", "10", "--additivity", "", "1", "--seed", "4", "--out", "x"]
        )

        # Act
        config = config_from_args(args)

        # Assert
        assert config == ExperimentConfig(
            "trace", {"measure": "staircase", "depth": 10, "additivity": ["", "1"]}, 4, Path("x")
        )

    # =================================

    def test_heavy_levels_are_integers(self) -> None:
        # Arrange
        args = build_parser().parse_args(["heavy", "--levels", "1", "3"])

        # Act
        config = config_from_args(args)

        # Assert
        assert config.params == {"levels": [1, 3]}
        assert config.seed == 0

    # =================================

    def test_flags_with_underscores(self) -> None:
        # Arrange/Act
        config = config_from_args(build_parser().parse_args(["vv", "--max-k", "2", "--kraft-bits", "5"]))

        # Assert
        assert config.params == {"max_k": 2, "kraft_bits": 5}

    # =================================
    # Test Cases for commands
    # =================================

    def test_no_command_prints_usage(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Arrange/Act
        code = main([])

        # Assert
        assert code == ExitCode.CONFIG
        assert "usage: cantorlab" in capsys.readouterr().out

    # =================================

    def test_validate_command(self, tmp_path: Path) -> None:
        # Arrange/Act
        code = main(["validate", "--measure", "oscillating", "--depth", "2", "--out", str(tmp_path)])

        # Assert
        assert code == ExitCode.OK
        assert json.loads((tmp_path / "validation.json").read_text(encoding="utf-8"))["checked"] == 49
        assert json.loads((tmp_path / SUMMARY_FILE).read_text(encoding="utf-8"))["ok"] is True

    # =================================

    def test_heavy_command(self, tmp_path: Path) -> None:
        # Arrange/Act
        code = main(["heavy", "--set", "[00]x*", "--n", "1", "--depth", "4", "--out", str(tmp_path)])

        # Assert
        assert code == ExitCode.OK
        heavy = json.loads((tmp_path / "heavy.json").read_text(encoding="utf-8"))
        assert heavy["scan"]["heavy"] == ["00"]

    # =================================

    def test_measure_error_is_a_config_error(self, tmp_path: Path) -> None:
        # Arrange/Act
        code = main(["trace", "--measure", "nothing", "--out", str(tmp_path)])

        # Assert
        assert code == ExitCode.CONFIG

    # =================================

    def test_config_file(self, tmp_path: Path) -> None:
        # Arrange
        path = tmp_path / "oscillate.json"
        path.write_text(json.dumps({"command": "oscillate", "depth": 8, "seed": 3}), encoding="utf-8")

        # Act
        code = main(["--config", str(path), "--out", str(tmp_path / "out")])

        # Assert
        assert code == ExitCode.OK
        assert json.loads((tmp_path / "out" / SUMMARY_FILE).read_text(encoding="utf-8"))["seed"] == 3

    # =================================

    def test_missing_config_file(self, tmp_path: Path) -> None:
        # Arrange/Act/Assert
        assert main(["--config", str(tmp_path / "missing.json")]) == ExitCode.CONFIG

    # =================================

    def test_plotdata_command(self, tmp_path: Path) -> None:
        # Arrange
        trace = tmp_path / "trace.csv"
        trace.write_text("depth,lo,hi,verdict\n0,1/2,1/2,undecided\n", encoding="utf-8")
        out = tmp_path / "plot.dat"

        # Act
        code = main(["plotdata", str(trace), "--out", str(out)])

        # Assert
        assert code == ExitCode.OK
        assert out.read_text(encoding="utf-8") == "# depth mid lo hi\n0 0.5 0.5 0.5\n"

    # =================================

    def test_plotdata_of_missing_file(self, tmp_path: Path) -> None:
        # Arrange/Act/Assert
        assert main(["plotdata", str(tmp_path / "trace.csv")]) == ExitCode.CONFIG

    # =================================

    def test_suite_command(self, tmp_path: Path) -> None:
        # Arrange
        configs = tmp_path / "configs"
        configs.mkdir()
        (configs / "a.json").write_text(json.dumps({"command": "validate", "measure": "uniform", "depth": 1}))

        # Act
        code = main(["suite", str(configs), "--out", str(tmp_path / "out"), "--workers", "1"])

        # Assert
        assert code == ExitCode.OK
        assert (tmp_path / "out" / "a" / "validation.json").exists()
