from fractions import Fraction

import pytest
from cantorlab import CantorLabException
from cantorlab.core.cantor import FULL_SQUARE, BitString, Rect, format_cylinder, parse_cylinder


class TestRect:
    # =================================
    # Test Cases for text forms
    # =================================

    @pytest.mark.parametrize(
        ["token", "bits"],
        [
            ("*", ""),
            ("[]", ""),
            ("[01]", "01"),
            (" [1] ", "1"),
        ],
    )
    def test_parse_cylinder(self, token: str, bits: str) -> None:
        # Arrange/Act/Assert
        assert parse_cylinder(token) == BitString(bits)

    # =================================

    @pytest.mark.parametrize(["token"], [("01",), ("[01",), ("[2]",)])
    def test_parse_cylinder_with_invalid_input(self, token: str) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            parse_cylinder(token)

    # =================================

    @pytest.mark.parametrize(["text"], [("*x*",), ("[00]x*",), ("[1]x[011]",)])
    def test_text_form_is_stable(self, text: str) -> None:
        # Arrange/Act
        rect = Rect.parse(text)

        # Assert
        assert str(rect) == text
        assert format_cylinder(rect.a1) == text.split("x")[0]

    # =================================

    @pytest.mark.parametrize(["text"], [("[0]",), ("[0]x[1]x[1]",)])
    def test_parse_with_invalid_input(self, text: str) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            Rect.parse(text)

    # =================================
    # Test Cases for geometry
    # =================================

    def test_containment_and_intersection(self) -> None:
        # Arrange
        wide, tall = Rect.of("0", ""), Rect.of("", "1")

        # Act
        meet = wide.intersect(tall)

        # Assert
        assert meet == Rect.of("0", "1")
        assert wide.contains(meet) and tall.contains(meet)
        assert FULL_SQUARE.contains(wide)
        assert Rect.of("0", "").intersect(Rect.of("1", "")) is None

    # =================================

    def test_splits_and_mass(self) -> None:
        # Arrange
        rect = Rect.of("1", "0")

        # Act
        left, right = rect.split_x()
        bottom, top = rect.split_y()

        # Assert
        assert (left, right) == (Rect.of("10", "0"), Rect.of("11", "0"))
        assert (bottom, top) == (Rect.of("1", "00"), Rect.of("1", "01"))
        assert rect.uniform_mass() == Fraction(1, 4)
        assert rect.depth == 1
        assert rect.contains_point(BitString("10"), BitString("01"))
        assert not rect.contains_point(BitString("00"), BitString("01"))
