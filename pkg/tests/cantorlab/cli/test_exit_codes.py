import pytest
from cantorlab.cli import ExitCode, Outcome, outcome, to_csv_text, to_json_text, worst


class TestExitCode:
    # =================================
    # Test Cases for severity
    # =================================

    @pytest.mark.parametrize(
        ["codes", "expected"],
        [
            ([], ExitCode.OK),
            ([ExitCode.OK, ExitCode.OK], ExitCode.OK),
            ([ExitCode.OK, ExitCode.PRECONDITION], ExitCode.PRECONDITION),
            ([ExitCode.PRECONDITION, ExitCode.VIOLATED], ExitCode.VIOLATED),
            ([ExitCode.VIOLATED, ExitCode.CONFIG, ExitCode.OK], ExitCode.CONFIG),
        ],
    )
    def test_worst(self, codes: list[ExitCode], expected: ExitCode) -> None:
        # Arrange/Act/Assert
        assert worst(codes) is expected

    # =================================

    def test_codes_are_process_exit_codes(self) -> None:
        # Arrange/Act/Assert
        assert [int(c) for c in (ExitCode.OK, ExitCode.VIOLATED, ExitCode.CONFIG, ExitCode.PRECONDITION)] == [
            0,
            1,
            2,
            3,
        ]


class TestOutcome:
    # =================================
    # Test Cases for outcomes
    # =================================

    @pytest.mark.parametrize(
        ["violations", "unmet", "expected"],
        [
            ([], None, ExitCode.OK),
            ([], ["zero marginal"], ExitCode.PRECONDITION),
            (["bound"], ["zero marginal"], ExitCode.VIOLATED),
        ],
    )
    def test_outcome_code(self, violations: list[str], unmet: list[str] | None, expected: ExitCode) -> None:
        # Arrange/Act
        result = outcome("validate", violations, {}, unmet)

        # Assert
        assert result.code is expected
        assert result.ok is (expected is ExitCode.OK)
        assert result.violations == tuple(violations + (unmet or []))

    # =================================

    def test_summary(self) -> None:
        # Arrange
        result = Outcome("trace", ExitCode.VIOLATED, ("depth 2: expected 2/3, got [1/3, 1/3]",))

        # Act
        summary = result.summary(7)

        # Assert
        assert summary == {
            "command": "trace",
            "ok": False,
            "violations": ["depth 2: expected 2/3, got [1/3, 1/3]"],
            "seed": 7,
            "code": 1,
        }

    # =================================
    # Test Cases for serialisation
    # =================================

    def test_json_text_is_deterministic(self) -> None:
        # Arrange/Act
        text = to_json_text({"b": 1, "a": [1, 2]})

        # Assert
        assert text == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
        assert text == to_json_text({"a": [1, 2], "b": 1})

    # =================================

    def test_csv_text(self) -> None:
        # Arrange/Act/Assert
        assert to_csv_text([["depth", "lo"], ["0", "2/3"]]) == "depth,lo\n0,2/3\n"
        assert to_csv_text([]) == ""
