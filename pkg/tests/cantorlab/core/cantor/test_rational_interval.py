from fractions import Fraction

import pytest
from cantorlab import CantorLabException
from cantorlab.core.cantor import RationalInterval


class TestRationalInterval:
    # =================================
    # Test Cases for creation
    # =================================

    def test_creation_coerces_to_fractions(self) -> None:
        # Arrange/Act
        interval = RationalInterval(0, 1)  # type: ignore[arg-type]

        # Assert
        assert isinstance(interval.lo, Fraction) and isinstance(interval.hi, Fraction)
        assert interval == RationalInterval.unit()

    # =================================

    def test_creation_with_reversed_bounds(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            RationalInterval(Fraction(1, 2), Fraction(1, 4))

    # =================================
    # Test Cases for arithmetic
    # =================================

    def test_arithmetic(self) -> None:
        # Arrange
        a = RationalInterval(Fraction(1, 4), Fraction(1, 2))
        b = RationalInterval.point(Fraction(1, 8))

        # Act/Assert
        assert a + b == RationalInterval(Fraction(3, 8), Fraction(5, 8))
        assert a - b == RationalInterval(Fraction(1, 8), Fraction(3, 8))
        assert a.scale(2) == RationalInterval(Fraction(1, 2), Fraction(1))
        assert a.width == Fraction(1, 4) and a.mid == Fraction(3, 8)
        assert b.is_point and not a.is_point

    # =================================

    def test_divide(self) -> None:
        # Arrange
        numerator = RationalInterval(Fraction(1, 8), Fraction(1, 4))
        denominator = RationalInterval(Fraction(1, 4), Fraction(1, 2))

        # Act
        quotient = numerator.divide(denominator)

        # Assert
        assert quotient == RationalInterval(Fraction(1, 4), Fraction(1))

    # =================================

    @pytest.mark.parametrize(
        ["numerator", "denominator"],
        [
            (RationalInterval.point(Fraction(1, 2)), RationalInterval(Fraction(0), Fraction(1, 2))),
            (RationalInterval(Fraction(-1), Fraction(0)), RationalInterval.point(Fraction(1))),
        ],
    )
    def test_divide_with_invalid_input(self, numerator: RationalInterval, denominator: RationalInterval) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            numerator.divide(denominator)

    # =================================
    # Test Cases for set relations
    # =================================

    def test_hull_and_intersection(self) -> None:
        # Arrange
        a = RationalInterval(Fraction(0), Fraction(1, 2))
        b = RationalInterval(Fraction(1, 4), Fraction(3, 4))
        c = RationalInterval(Fraction(7, 8), Fraction(1))

        # Act/Assert
        assert RationalInterval.hull([a, b, c]) == RationalInterval.unit()
        assert a.intersect(b) == RationalInterval(Fraction(1, 4), Fraction(1, 2))
        assert a.intersect(c) is None
        assert a.intersects(b) and not a.intersects(c)
        assert b.contains(Fraction(1, 2)) and b.contains(RationalInterval.point(Fraction(3, 4)))
        assert not b.contains(a)

    # =================================

    def test_hull_of_nothing(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            RationalInterval.hull([])

    # =================================

    @pytest.mark.parametrize(
        ["interval", "expected"],
        [
            (RationalInterval(Fraction(-1, 2), Fraction(1, 4)), RationalInterval(Fraction(0), Fraction(1, 4))),
            (RationalInterval(Fraction(3, 2), Fraction(2)), RationalInterval.point(Fraction(1))),
            (RationalInterval(Fraction(1, 3), Fraction(2, 3)), RationalInterval(Fraction(1, 3), Fraction(2, 3))),
        ],
    )
    def test_clamp(self, interval: RationalInterval, expected: RationalInterval) -> None:
        # Arrange/Act/Assert
        assert interval.clamp() == expected

    # =================================

    def test_text_form(self) -> None:
        # Arrange/Act/Assert
        assert str(RationalInterval(Fraction(1, 3), Fraction(2, 3))) == "[1/3, 2/3]"
