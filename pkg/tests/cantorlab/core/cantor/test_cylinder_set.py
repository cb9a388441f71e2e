from fractions import Fraction
from random import Random

import pytest
from cantorlab import CantorLabException
from cantorlab.core.cantor import BitString, CylinderSet, random_cylinder_set
from hypothesis import given
from hypothesis import strategies as st


class TestCylinderSet:
    # =================================
    # Test Cases for canonical form
    # =================================

    @pytest.mark.parametrize(
        ["cylinders", "expected"],
        [
            ([], "{}"),
            (["00", "01"], "[0]"),
            (["0", "01", "1"], "*"),
            (["01", "1", "00"], "*"),
            (["011", "010", "11"], "[01]+[11]"),
            (["10", "0"], "[0]+[10]"),
        ],
    )
    def test_canonical_form(self, cylinders: list[str], expected: str) -> None:
        # Arrange/Act
        result = CylinderSet(cylinders)

        # Assert
        assert str(result) == expected
        assert CylinderSet.parse(expected) == result

    # =================================

    @pytest.mark.parametrize(["text"], [("",), ("{}",)])
    def test_parse_empty(self, text: str) -> None:
        # Arrange/Act
        result = CylinderSet.parse(text)

        # Assert
        assert result.is_empty and result == CylinderSet.empty()

    # =================================
    # Test Cases for boolean operations
    # =================================

    def test_boolean_operations(self) -> None:
        # Arrange
        left, middle = CylinderSet.parse("[0]"), CylinderSet.parse("[01]+[10]")

        # Act/Assert
        assert str(left | middle) == "[0]+[10]"
        assert str(left & middle) == "[01]"
        assert str(left - middle) == "[00]"
        assert str(middle - left) == "[10]"
        assert left.complement() == CylinderSet.parse("[1]")
        assert CylinderSet.full() - CylinderSet.parse("[01]") == CylinderSet.parse("[00]+[1]")
        assert (left | left.complement()).is_full

    # =================================

    def test_containment(self) -> None:
        # Arrange
        cylinders = CylinderSet.parse("[00]+[01]+[1]")

        # Act/Assert
        assert cylinders.is_full
        assert CylinderSet.parse("[01]").is_subset(CylinderSet.parse("[0]"))
        assert not CylinderSet.parse("[0]").is_subset(CylinderSet.parse("[01]"))
        assert CylinderSet.parse("[00]+[01]").covers(BitString("0"))
        assert CylinderSet.parse("[01]").meets(BitString("0"))
        assert not CylinderSet.parse("[01]").covers(BitString("0"))
        assert CylinderSet.parse("[01]").contains_point(BitString("0110"))

    # =================================
    # Test Cases for measures and grids
    # =================================

    def test_measure(self) -> None:
        # Arrange
        cylinders = CylinderSet.parse("[0]+[10]")

        # Act/Assert
        assert cylinders.uniform_measure() == Fraction(3, 4)
        assert cylinders.measure(lambda w: Fraction(1, 2) ** len(w) * (2 if w.bits == "10" else 1)) == 1

    # =================================

    def test_grids(self) -> None:
        # Arrange
        cylinders = CylinderSet.parse("[1]")

        # Act/Assert
        assert cylinders.at_depth(2) == [BitString("10"), BitString("11")]
        assert cylinders.runs(3) == [(4, 8)]
        assert CylinderSet.parse("[0]+[11]").restrict(BitString("1")) == CylinderSet.parse("[11]")
        with pytest.raises(CantorLabException):
            CylinderSet.parse("[011]").runs(2)

    # =================================
    # Test Cases for properties
    # =================================

    @given(st.integers(min_value=0, max_value=2**32))
    def test_inclusion_exclusion(self, seed: int) -> None:
        # Arrange
        rng = Random(seed)
        a, b = random_cylinder_set(rng, 4, 5), random_cylinder_set(rng, 4, 5)

        # Act
        union, meet = (a | b).uniform_measure(), (a & b).uniform_measure()

        # Assert
        assert union + meet == a.uniform_measure() + b.uniform_measure()
        assert (a - b) | (a & b) == a
