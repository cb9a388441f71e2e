from fractions import Fraction

from cantorlab.core.cantor import BitString
from cantorlab.measures import (
    BernoulliMeasure,
    DiracMeasure,
    KernelConfig,
    KernelMeasure,
    MeasureOracle,
    TabulatedMeasure,
    UniformMeasure,
    oscillating,
    segments,
    staircase,
    uniform,
)


class MeasureFixtures:
    """Small exact measures shared by the test modules."""

    @staticmethod
    def bernoulli_kernel() -> KernelMeasure:
        """Uniform `P₁`; fibre Bernoulli(1/4) over `[0]` and the atom at `1000…` over `[1]`."""
        return KernelMeasure(
            UniformMeasure(),
            KernelConfig(
                1, {BitString("0"): BernoulliMeasure(Fraction(1, 4)), BitString("1"): DiracMeasure(BitString("1"))}
            ),
        )

    @staticmethod
    def tabulated_kernel() -> KernelMeasure:
        """Uniform `P₁`; fibre Bernoulli(9/16) over `[0]` and a depth-2 table over `[1]`."""
        table = TabulatedMeasure(2, {"10": Fraction(7, 32), "11": Fraction(25, 32)})
        return KernelMeasure(
            UniformMeasure(),
            KernelConfig(1, {BitString("0"): BernoulliMeasure(Fraction(9, 16)), BitString("1"): table}),
        )

    @staticmethod
    def exact_oracles() -> list[MeasureOracle]:
        """One instance of every exact family."""
        return [
            uniform(),
            oscillating(),
            staircase(),
            segments(),
            MeasureFixtures.bernoulli_kernel(),
            MeasureFixtures.tabulated_kernel(),
        ]
