from fractions import Fraction

import pytest
from cantorlab import CantorLabException
from cantorlab.core.cantor import BitString, CylinderFunction
from cantorlab.measures import BernoulliMeasure, KernelConfig, UniformMeasure
from cantorlab.testcalc import ConditionalTestFamily


class TestConditionalTestFamily:
    # =================================
    # Test Cases for members
    # =================================

    def test_constant_family(self) -> None:
        # Arrange
        fam = ConditionalTestFamily.constant(1, 2)

        # Act
        member = fam.member(BitString("0110"), 1)

        # Assert
        assert member.depth == 1
        assert member.value(BitString("1")) == 1
        assert fam.violations(KernelConfig.constant(UniformMeasure())) == []

    # =================================

    def test_members_depend_on_cell_and_level(self) -> None:
        # Arrange
        fam = ConditionalTestFamily.from_callable(
            1, 1, lambda x, k: CylinderFunction.constant(x.index + k, 1)
        )

        # Act/Assert
        assert fam.member(BitString("0"), 0).value(BitString("1")) == 0
        assert fam.member(BitString("11"), 1).value(BitString("0")) == 2

    # =================================
    # Test Cases for violations
    # =================================

    def test_members_above_one_are_reported(self) -> None:
        # Arrange
        fam = ConditionalTestFamily.from_callable(
            1, 0, lambda x, k: CylinderFunction.from_callable(1, lambda y: 2 if y.bits == "1" else 0)
        )
        fibers = {BitString("0"): UniformMeasure(), BitString("1"): BernoulliMeasure(Fraction(3, 4))}
        kernel = KernelConfig(1, fibers)

        # Act
        violations = fam.violations(kernel)

        # Assert
        assert violations == [(BitString("1"), 0, Fraction(3, 2))]

    # =================================
    # Test Cases for errors
    # =================================

    def test_incomplete_tables_raise(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            ConditionalTestFamily(1, 0, {(BitString("0"), 0): CylinderFunction.constant(1)})

    # =================================

    def test_members_must_be_coarse_enough(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(CantorLabException):
            ConditionalTestFamily.from_callable(0, 0, lambda x, k: CylinderFunction.constant(1, 2))

    # =================================

    def test_out_of_range_levels_and_fine_kernels_raise(self) -> None:
        # Arrange
        fam = ConditionalTestFamily.constant(0, 1)

        # Act/Assert
        with pytest.raises(CantorLabException):
            fam.member(BitString("0"), 2)
        with pytest.raises(CantorLabException):
            fam.violations(KernelConfig.constant(UniformMeasure(), depth=1))
