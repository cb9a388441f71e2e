from fractions import Fraction
from random import Random

import pytest
from cantorlab import PreconditionException
from cantorlab.conditional import martingale_check
from cantorlab.core.cantor import BasicSet, BitString
from cantorlab.heavy import HeavyScanner, enumerate_heavy, heaviness_martingale, is_heavy, random_small_set
from cantorlab.measures import (
    DiracMeasure,
    MeasureOracle,
    RoundedOracle,
    UniformMeasure,
    oscillating,
    product,
    segments,
    staircase,
    uniform,
)
from hypothesis import given, settings
from hypothesis import strategies as st


class TestHeavyScan:
    # =================================
    # Test Cases for heaviness
    # =================================

    def test_is_heavy_is_strict(self) -> None:
        # Arrange
        u = BasicSet.parse("[00]x*")

        # Act/Assert
        assert is_heavy(uniform(), u, 1, BitString("00"))
        assert not is_heavy(uniform(), u, 1, BitString("0"))
        assert not is_heavy(uniform(), u, 1, BitString("1"))

    # =================================

    def test_maximal_heavy_intervals(self) -> None:
        # Arrange
        u = BasicSet.parse("[00]x*")

        # Act
        scan = enumerate_heavy(uniform(), u, 1, 4)

        # Assert
        assert scan.heavy == (BitString("00"),)
        assert scan.covers(BitString("001"))
        assert not scan.covers(BitString("01"))
        assert scan.to_json() == {"n": 1, "heavy": ["00"], "union_measure": "1/4", "bound": "2^-1", "ok": True}

    # =================================

    def test_zero_marginal_intervals_are_skipped(self) -> None:
        # Arrange
        oracle = product(DiracMeasure(BitString("0")), UniformMeasure())
        scanner = HeavyScanner(oracle, debug=True)

        # Act
        scan = scanner.scan(BasicSet.parse("[0]x[1]"), 1, 3)

        # Assert
        assert scan.heavy == ()
        assert scan.skipped == (BitString("1"), BitString("01"), BitString("001"))

    # =================================

    def test_enclosure_oracles_are_rejected(self) -> None:
        # Arrange/Act/Assert
        with pytest.raises(PreconditionException):
            HeavyScanner(RoundedOracle(uniform()))
        with pytest.raises(PreconditionException):
            enumerate_heavy(uniform(), BasicSet.empty(), -1, 3)

    # =================================

    def test_heaviness_martingale(self) -> None:
        # Arrange
        u = BasicSet.parse("[00]x*")

        # Act
        m = heaviness_martingale(uniform(), u, 3)

        # Assert
        assert m.initial == Fraction(1, 4)
        assert m.value(BitString("00")) == 1
        assert m.value(BitString("01")) == 0
        assert martingale_check(m).ok

    # =================================
    # Test Cases for the union bound
    # =================================

    @pytest.mark.parametrize(["oracle"], [(uniform(),), (oscillating(),)])
    @given(seed=st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=25, deadline=None)
    def test_union_of_heavy_intervals_is_small(self, oracle: MeasureOracle, seed: int) -> None:
        # Arrange
        u = random_small_set(Random(seed), oracle, n=2, max_rects=5, max_depth=5)

        # Act
        scan = enumerate_heavy(oracle, u, 2, 5)

        # Assert
        assert scan.applies
        assert scan.ok
        assert scan.union_measure <= Fraction(1, 4)

    # =================================

    @pytest.mark.parametrize(["oracle"], [(oscillating(),), (staircase(),), (segments(),)])
    def test_thousand_random_trials_meet_the_union_bound(self, oracle: MeasureOracle) -> None:
        # Arrange
        rng = Random(2024)
        scanner = HeavyScanner(oracle)

        # Act
        failed = []
        for trial in range(1000):
            level = 1 + trial % 3
            scan = scanner.scan(random_small_set(rng, oracle, level), level, 8)
            if not scan.ok:
                failed.append((trial, scan.union_measure))

        # Assert
        assert failed == []
