from fractions import Fraction

import pytest
from cantorlab import ConfigException
from cantorlab.trimming import dyadic_slowdown, no_slowdown, parse_slowdown, scaled_slowdown


class TestSlowdown:
    # =================================
    # Test Cases for the schedules
    # =================================

    @pytest.mark.parametrize(
        ["text", "level", "expected"],
        [
            ("none", 3, Fraction(0)),
            ("dyadic", 0, Fraction(1)),
            ("dyadic", 3, Fraction(1, 8)),
            ("scaled:3/2", 1, Fraction(3, 4)),
            ("scaled:2", 4, Fraction(1, 8)),
        ],
    )
    def test_parse_slowdown(self, text: str, level: int, expected: Fraction) -> None:
        # Arrange/Act
        schedule = parse_slowdown(text)

        # Assert
        assert schedule(level) == expected

    # =================================

    def test_named_schedules(self) -> None:
        # Arrange/Act/Assert
        assert parse_slowdown("none") is no_slowdown
        assert parse_slowdown(" dyadic ") is dyadic_slowdown
        assert scaled_slowdown(0)(2) == 0

    # =================================

    @pytest.mark.parametrize(["text"], [("fast",), ("scaled",), ("scaled:-1",), ("none:1",), ("scaled:x",)])
    def test_unknown_schedules_raise(self, text: str) -> None:
        # Arrange/Act/Assert
        with pytest.raises(ConfigException):
            parse_slowdown(text)
