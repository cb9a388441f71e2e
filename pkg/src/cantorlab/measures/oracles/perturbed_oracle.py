from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import RationalInterval, Rect
from ...core.utils import format_rational
from .measure_oracle import MeasureOracle


@final
class PerturbedOracle(MeasureOracle):
    """A deliberately corrupted oracle: one rectangle's mass is shifted by `delta`."""

    __slots__ = ("__inner", "__cell", "__delta")

    def __init__(self, inner: MeasureOracle, cell: Rect, delta: Fraction) -> None:
        """
        Initialize an instance of `PerturbedOracle`.

        :param inner: The oracle to corrupt.
        :param cell: The rectangle whose mass is shifted.
        :param delta: The shift.
        """
        self.__inner: MeasureOracle = inner
        self.__cell: Rect = cell
        self.__delta: Fraction = Fraction(delta)

    @property
    def cell(self) -> Rect:
        """The corrupted rectangle."""
        return self.__cell

    @property
    @override
    def is_exact(self) -> bool:
        return self.__inner.is_exact

    @override
    def mass(self, rect: Rect, precision: Fraction = Fraction(0)) -> RationalInterval:
        enclosure = self.__inner.mass(rect, precision)
        if rect != self.__cell:
            return enclosure
        return RationalInterval(enclosure.lo + self.__delta, enclosure.hi + self.__delta)

    @override
    def to_spec(self) -> dict[str, Any]:
        return {
            "kind": "perturbed",
            "inner": self.__inner.to_spec(),
            "rect": str(self.__cell),
            "delta": format_rational(self.__delta),
        }
