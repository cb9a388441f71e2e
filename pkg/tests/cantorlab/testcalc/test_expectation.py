from fractions import Fraction

import pytest
from cantorlab import CantorLabException
from cantorlab.core.cantor import BitString, CylinderFunction, Rect
from cantorlab.measures import BernoulliMeasure, UniformMeasure, oscillating, uniform
from cantorlab.testcalc import ExpectationTest, Measure, deficiency, integral, make_test


def _ramp() -> CylinderFunction[BitString]:
    values = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(5, 2)]
    return CylinderFunction.from_callable(2, lambda w: values[w.index])


class TestIntegral:
    # =================================
    # Test Cases for exact integration
    # =================================

    @pytest.mark.parametrize(
        ["measure", "expected"],
        [
            (UniformMeasure(), Fraction(1)),
            (BernoulliMeasure(Fraction(1, 2)), Fraction(1)),
            (BernoulliMeasure(Fraction(1)), Fraction(5, 2)),
            (oscillating(), Fraction(1)),
        ],
    )
    def test_one_factor_integrals(self, measure: Measure, expected: Fraction) -> None:
        # Arrange/Act/Assert
        assert integral(_ramp(), measure) == expected

    # =================================

    def test_product_integral(self) -> None:
        # Arrange
        f = CylinderFunction.from_callable(1, lambda r: 4 if r == Rect.of("1", "1") else 0, arity=2)

        # Act/Assert
        assert integral(f, uniform()) == 1
        with pytest.raises(CantorLabException):
            integral(f, UniformMeasure())


class TestExpectationTest:
    # =================================
    # Test Cases for tests
    # =================================

    def test_functions_integrating_to_one_are_tests(self) -> None:
        # Arrange/Act
        t = make_test(_ramp(), UniformMeasure())

        # Assert
        assert not t.trimmed
        assert t.integral == 1
        assert t.value(BitString("110")) == Fraction(5, 2)
        assert t.to_json() == {"construction": "test", "integral": "1/1", "bound": "1", "ok": True}
        assert t.to_csv_rows()[:2] == [["cell", "value"], ["00", "0/1"]]

    # =================================

    def test_heavy_functions_are_scaled_down(self) -> None:
        # Arrange/Act
        t = make_test(CylinderFunction.constant(4), UniformMeasure())

        # Assert
        assert t.trimmed
        assert t.scaled_by == Fraction(1, 4)
        assert t.integral == 1

    # =================================

    def test_heavy_functions_are_rejected(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            ExpectationTest(CylinderFunction.constant(2), UniformMeasure())


class TestDeficiency:
    # =================================
    # Test Cases for the deficiency field
    # =================================

    def test_deficiency_levels(self) -> None:
        # Arrange
        t = make_test(_ramp(), UniformMeasure())

        # Act
        field = deficiency(t)

        # Assert
        assert [level for _, level in field.items()] == [None, -1, 0, 1]
        assert field.value(BitString("110")) == 1
        assert field.to_rows()[0] == ("00", "-inf")
        assert field.to_rows()[-1] == ("11", "1")

    # =================================

    def test_product_deficiency(self) -> None:
        # Arrange
        f = CylinderFunction.from_callable(1, lambda r: 4 if r == Rect.of("1", "1") else 0, arity=2)

        # Act
        field = deficiency(make_test(f, uniform()))

        # Assert
        assert field.value(Rect.of("11", "10")) == 2
        assert field.value(Rect.of("0", "1")) is None
