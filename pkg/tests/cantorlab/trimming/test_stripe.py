from fractions import Fraction

import pytest
from cantorlab import NotStableException, ZeroMarginalException
from cantorlab.core.cantor import EMPTY, BasicSet, BitString, RationalInterval
from cantorlab.measures import DiracMeasure, RoundedOracle, UniformMeasure, oscillating, product, uniform
from cantorlab.trimming import Stripe, vertical_size


class TestStripe:
    # =================================
    # Test Cases for stripes
    # =================================

    def test_stripe(self) -> None:
        # Arrange
        stripe = Stripe(BitString("01"))

        # Act/Assert
        assert stripe.level == 2
        assert str(stripe) == "[01]"
        assert str(Stripe(EMPTY)) == "*"
        assert stripe.as_set() == BasicSet.parse("[01]x*")
        assert stripe.children() == (Stripe(BitString("010")), Stripe(BitString("011")))
        assert stripe.height(oscillating()) == Fraction(1, 4)

    # =================================
    # Test Cases for vertical sizes
    # =================================

    @pytest.mark.parametrize(
        ["text", "footprint", "expected"],
        [
            ("[0]x[1]", "0", Fraction(1, 2)),
            ("[0]x[1]", "01", Fraction(1, 2)),
            ("[0]x[1]", "1", Fraction(0)),
            ("*x[00]+[1]x[1]", "1", Fraction(3, 4)),
        ],
    )
    def test_vertical_size(self, text: str, footprint: str, expected: Fraction) -> None:
        # Arrange/Act
        size = vertical_size(uniform(), BasicSet.parse(text), Stripe(BitString(footprint)))

        # Assert
        assert size == RationalInterval.point(expected)

    # =================================

    def test_enclosed_vertical_size(self) -> None:
        # Arrange
        oracle = RoundedOracle(oscillating())

        # Act
        size = vertical_size(oracle, BasicSet.parse("*x[1]"), Stripe(BitString("0")), Fraction(1, 32))

        # Assert
        assert size.contains(Fraction(1, 3))
        assert size.width <= Fraction(1, 32)

    # =================================

    def test_unstable_set_raises(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(NotStableException) as info:
            vertical_size(uniform(), BasicSet.parse("[01]x[1]"), Stripe(BitString("0")))
        assert info.value.prefix == "0"

    # =================================

    def test_zero_marginal_stripe_raises(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(ZeroMarginalException):
            vertical_size(product(DiracMeasure(), UniformMeasure()), BasicSet.parse("[1]x[1]"), Stripe(BitString("1")))
