import json
from pathlib import Path

import pytest
from cantorlab.cli import SUMMARY_FILE, ExitCode, ExperimentConfig, ExperimentRunner, commands
from cantorlab.core.cantor import BasicSet
from cantorlab.core.settings import Settings
from cantorlab.measures import MeasureOracle
from cantorlab.trimming import CoverSequence, GammaOracle, TrimConfig, TrimResult


@pytest.fixture
def runner() -> ExperimentRunner:
    return ExperimentRunner(Settings(maxdepth=None, debug=False))


def _summary(out: Path) -> dict[str, object]:
    return json.loads((out / SUMMARY_FILE).read_text(encoding="utf-8"))  # type: ignore[no-any-return]


PERTURBED: dict[str, object] = {"kind": "perturbed", "inner": "uniform", "rect": "[0]x[1]", "delta": "1/64"}


class TestExperimentRunner:
    # =================================
    # Test Cases for validate
    # =================================

    def test_validate_writes_report_and_summary(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig("validate", {"measure": "uniform", "depth": 1})

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.OK
        report = json.loads((tmp_path / "validation.json").read_text(encoding="utf-8"))
        assert report == {"depth": 1, "exact": True, "checked": 9, "ok": True, "violations": []}
        assert _summary(tmp_path) == {"command": "validate", "ok": True, "violations": [], "seed": 0, "code": 0}

    # =================================

    def test_validate_reports_violations(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig("validate", {"measure": json.dumps(PERTURBED), "depth": 2})

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.VIOLATED
        assert any(v.startswith("additivity-x at *x[1]: expected") for v in result.violations)
        assert _summary(tmp_path)["code"] == 1

    # =================================

    @pytest.mark.parametrize(
        ["params"],
        [
            ({},),
            ({"measure": "gaussian"},),
            ({"measure": "{broken"},),
            ({"measure": "uniform", "depth": "deep"},),
        ],
    )
    def test_configuration_errors(self, runner: ExperimentRunner, tmp_path: Path, params: dict[str, object]) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("validate", params), tmp_path)

        # Assert
        assert result.code is ExitCode.CONFIG
        assert result.violations[0].startswith("config:")
        assert _summary(tmp_path)["code"] == 2

    # =================================
    # Test Cases for traces
    # =================================

    def test_oscillate(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("oscillate"), tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        rows = (tmp_path / "trace.csv").read_text(encoding="utf-8").splitlines()
        assert rows[0] == "depth,lo,hi,verdict"
        assert rows[1].startswith("0,2/3,2/3,")
        assert rows[2].startswith("1,1/3,1/3,")
        trace = json.loads((tmp_path / "trace.json").read_text(encoding="utf-8"))
        assert trace["verdict"] == "oscillating:1/3:1/3:2/3:2/3"

    # =================================

    def test_trace_with_zero_marginal_is_a_precondition(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig(
            "trace", {"measure": {"kind": "product", "p1": "dirac", "p2": "uniform"}, "path": "ones", "depth": 4}
        )

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.PRECONDITION
        assert result.violations[0].startswith("zero marginal:")

    # =================================

    def test_trace_with_additivity(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig(
            "trace", {"measure": "staircase", "path": "zeros", "depth": 14, "additivity": ["", "1"]}
        )

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        trace = json.loads((tmp_path / "trace.json").read_text(encoding="utf-8"))
        assert [entry["a2"] for entry in trace["additivity"]] == ["", "1"]
        assert [entry["status"] for entry in trace["additivity"]] == ["ok", "ok"]

    # =================================
    # Test Cases for the other commands
    # =================================

    def test_martingale(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("martingale", {"depth": 6}), tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        summary = json.loads((tmp_path / "martingale.json").read_text(encoding="utf-8"))
        assert summary["initial"] == "2/3"
        assert [e["level"] for e in summary["exceed"]] == ["3/4", "1/1"]
        assert [u["n"] for u in summary["upcrossings"]] == [1, 2, 3, 4]
        assert (tmp_path / "martingale.csv").read_text(encoding="utf-8").startswith("cell,value\n")

    # =================================

    def test_heavy(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig("heavy", {"set": "[00]x*", "n": 1, "depth": 4, "trials": 3, "levels": [1, 2]})

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        summary = json.loads((tmp_path / "heavy.json").read_text(encoding="utf-8"))
        assert summary["trials"] == 3
        assert summary["skipped"] == []

    # =================================

    def test_discard(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig("discard", {"set": "[0]x*", "depth": 4, "trials": 10})

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        assert json.loads((tmp_path / "discard.json").read_text(encoding="utf-8")) == {"checked": 11, "depth": 4}

    # =================================

    def test_discard_needs_segments(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("discard", {"measure": "uniform"}), tmp_path)

        # Assert
        assert result.code is ExitCode.CONFIG

    # =================================

    def test_overlapping_trim_scenario(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("trim", {"scenario": "overlapping"}), tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        summary = json.loads((tmp_path / "trim.json").read_text(encoding="utf-8"))
        assert summary["naive"] == "21/64"
        assert summary["G"] == ["[1]x*", "[1]x*"]
        assert summary["coverage"]["status"] == "covered"
        assert (tmp_path / "ledger.csv").exists()

    # =================================

    def test_coverage_trim_scenarios(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("trim", {"scenario": "coverage", "count": 3}), tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        summary = json.loads((tmp_path / "coverage.json").read_text(encoding="utf-8"))
        assert summary["covered"] == 3
        assert [s["level"] for s in summary["scenarios"]] == [s["convergence"] for s in summary["scenarios"]]

    # =================================

    def test_trimmed_scenario_point_is_a_violation(
        self, runner: ExperimentRunner, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        # Arrange
        def trim_nothing(
            oracle: MeasureOracle, gamma: GammaOracle, covers: CoverSequence, cfg: TrimConfig
        ) -> TrimResult:
            empty = (BasicSet.empty(),) * len(covers)
            return TrimResult(covers, ((),) * len(covers), empty, empty)

        monkeypatch.setattr(commands, "trim", trim_nothing)

        # Act
        result = runner.run(ExperimentConfig("trim", {"scenario": "coverage", "count": 1}), tmp_path)

        # Assert
        assert result.code is ExitCode.VIOLATED
        assert result.violations[0].startswith("scenario 0: coverage: stripe [")
        summary = json.loads((tmp_path / "coverage.json").read_text(encoding="utf-8"))
        assert summary["scenarios"][0]["status"] == "not-covered"

    # =================================

    def test_unknown_trim_scenario(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange/Act
        result = runner.run(ExperimentConfig("trim", {"scenario": "diagonal"}), tmp_path)

        # Assert
        assert result.code is ExitCode.CONFIG

    # =================================

    def test_vv(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig("vv", {"depth": 3, "max_k": 2, "trials": 3, "kraft_bits": 4})

        # Act
        result = runner.run(config, tmp_path)

        # Assert
        assert result.code is ExitCode.OK, result.violations
        assert len(json.loads((tmp_path / "ledger.json").read_text(encoding="utf-8"))) == 6

    # =================================
    # Test Cases for reproducibility
    # =================================

    def test_same_seed_writes_identical_files(self, runner: ExperimentRunner, tmp_path: Path) -> None:
        # Arrange
        config = ExperimentConfig("heavy", {"depth": 4, "trials": 5}, seed=11)

        # Act
        runner.run(config, tmp_path / "a")
        runner.run(config, tmp_path / "b")

        # Assert
        for name in ("heavy.json", SUMMARY_FILE):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    # =================================

    def test_depth_is_clamped_by_settings(self, tmp_path: Path) -> None:
        # Arrange
        runner = ExperimentRunner(Settings(maxdepth=1, debug=False))

        # Act
        runner.run(ExperimentConfig("validate", {"measure": "oscillating", "depth": 6}), tmp_path)

        # Assert
        assert json.loads((tmp_path / "validation.json").read_text(encoding="utf-8"))["depth"] == 1
