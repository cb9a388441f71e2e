from fractions import Fraction

import pytest
from cantorlab import CantorLabException
from cantorlab.core.cantor import BitString, CylinderFunction, Rect, cells_of_depth


class TestCylinderFunction:
    # =================================
    # Test Cases for creation
    # =================================

    def test_creation_from_callable(self) -> None:
        # Arrange/Act
        f = CylinderFunction.from_callable(1, lambda w: w.index)

        # Assert
        assert f.depth == 1 and f.arity == 1
        assert f.values() == [Fraction(0), Fraction(1)]
        assert f.to_rows() == [("0", "0/1"), ("1", "1/1")]

    # =================================

    @pytest.mark.parametrize(
        ["depth", "values"],
        [
            (1, {BitString("0"): Fraction(1)}),
            (1, {BitString("0"): Fraction(1), BitString("1"): Fraction(-1)}),
            (-1, {}),
        ],
    )
    def test_creation_with_invalid_input(self, depth: int, values: dict[BitString, Fraction]) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            CylinderFunction(depth, values)

    # =================================

    def test_cells_of_depth(self) -> None:
        # Arrange/Act/Assert
        assert len(cells_of_depth(2, 1)) == 4
        assert len(cells_of_depth(2, 2)) == 16
        with pytest.raises(CantorLabException):
            cells_of_depth(1, 3)

    # =================================
    # Test Cases for lookups
    # =================================

    def test_value_reads_the_containing_cell(self) -> None:
        # Arrange
        f = CylinderFunction.from_callable(1, lambda w: 3 * w.index)

        # Act/Assert
        assert f.value(BitString("10")) == 3
        assert f[BitString("0111")] == 0
        with pytest.raises(CantorLabException):
            f.value(BitString(""))

    # =================================

    def test_product_lookups_and_fibers(self) -> None:
        # Arrange
        f = CylinderFunction.from_callable(1, lambda r: r.a1.index + 2 * r.a2.index, arity=2)

        # Act
        fiber = f.fiber(BitString("1"))

        # Assert
        assert f.value(Rect.of("10", "11")) == 3
        assert fiber.values() == [Fraction(1), Fraction(3)]
        with pytest.raises(CantorLabException):
            f.value(BitString("1"))  # type: ignore[arg-type]
        with pytest.raises(CantorLabException):
            fiber.fiber(BitString("1"))

    # =================================
    # Test Cases for transformations
    # =================================

    def test_refine_scale_and_update(self) -> None:
        # Arrange
        f = CylinderFunction.from_callable(1, lambda w: w.index + 1)

        # Act
        refined = f.refine(2)
        scaled = f.scale(Fraction(1, 2))
        updated = f.with_value(BitString("0"), 5)

        # Assert
        assert refined.values() == [Fraction(1), Fraction(1), Fraction(2), Fraction(2)]
        assert f.refine(1) is f
        assert scaled.values() == [Fraction(1, 2), Fraction(1)]
        assert updated.values() == [Fraction(5), Fraction(2)] and updated.max_value() == 5
        assert CylinderFunction.constant(Fraction(1, 3), depth=1) == CylinderFunction.from_callable(
            1, lambda _: Fraction(1, 3)
        )
        with pytest.raises(CantorLabException):
            refined.refine(1)
        with pytest.raises(CantorLabException):
            f.with_value(BitString("00"), 1)
