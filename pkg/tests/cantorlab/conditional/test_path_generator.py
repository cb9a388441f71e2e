from fractions import Fraction

import pytest
from cantorlab import CantorLabException, ConfigException
from cantorlab.conditional import PathGenerator
from cantorlab.core.cantor import BitString

from ...fixtures import CallableMock


class TestPathGenerator:
    # =================================
    # Test Cases for the named paths
    # =================================

    @pytest.mark.parametrize(
        ["path", "expected"],
        [
            (PathGenerator.zeros(), "000000"),
            (PathGenerator.ones(), "111111"),
            (PathGenerator.periodic("01"), "010101"),
            (PathGenerator.periodic("110"), "110110"),
            (PathGenerator.from_prefix("11"), "110000"),
            (PathGenerator.from_rational(Fraction(1, 3)), "010101"),
            (PathGenerator.from_rational(Fraction(1, 2)), "100000"),
            (PathGenerator.from_rational(Fraction(5, 8)), "101000"),
        ],
    )
    def test_prefixes(self, path: PathGenerator, expected: str) -> None:
        # Arrange/Act/Assert
        assert path.prefix(6) == BitString(expected)
        assert path.prefix(0) == BitString("")

    # =================================
    # Test Cases for parsing
    # =================================

    @pytest.mark.parametrize(
        ["text", "label", "expected"],
        [
            ("zeros", "zeros", "0000"),
            ("ones", "ones", "1111"),
            ("periodic:10", "periodic:10", "1010"),
            ("rational:1/3", "rational:1/3", "0101"),
            ("prefix:1", "prefix:1", "1000"),
        ],
    )
    def test_parse(self, text: str, label: str, expected: str) -> None:
        # Arrange/Act
        path = PathGenerator.parse(text)

        # Assert
        assert path.label == label
        assert str(path) == label
        assert path.prefix(4).bits == expected

    # =================================

    @pytest.mark.parametrize(
        ["text"], [("",), ("twos",), ("zeros:1",), ("periodic:",), ("periodic:0a",), ("rational:3/2",)]
    )
    def test_parse_rejects_malformed_specs(self, text: str) -> None:
        # Arrange/Act/Assert
        with pytest.raises(ConfigException):
            PathGenerator.parse(text)

    # =================================
    # Test Cases for callables
    # =================================

    def test_bits_are_memoized(self) -> None:
        # Arrange
        bit = CallableMock(return_value=1)
        path = PathGenerator.from_callable(bit, label="mocked")

        # Act
        first = path.prefix(4)
        second = path.prefix(4)

        # Assert
        assert first == second == BitString("1111")
        assert bit.call_count == 4
        assert bit.last_args == (3,)

    # =================================

    def test_non_bits_raise(self) -> None:
        # Arrange
        path = PathGenerator.from_callable(lambda i: 2)

        # Act/Assert
        with pytest.raises(CantorLabException):
            path.bit(0)
        assert path.label.startswith("callable:")

    # =================================

    def test_from_callable_rejects_classes(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            PathGenerator.from_callable(int)
