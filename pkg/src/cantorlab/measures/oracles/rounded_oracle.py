from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import RationalInterval, Rect
from ...core.utils import dyadic_floor, floor_log2
from .measure_oracle import MeasureOracle


@final
class RoundedOracle(MeasureOracle):
    """
    An enclosure oracle wrapping an exact one: masses are reported as dyadic grid cells.

    **Notes:**

    -   For precision `p > 0` the grid spacing is the largest `2^-k <= p` and the enclosure is
        `[⌊v⌋_k, ⌊v⌋_k + 2^-k] ∩ [0, 1]`. Finer grids give nested cells, so enclosures for finer
        precisions are nested in coarser ones. Precision 0 returns the exact point.
    """

    __slots__ = ("__inner",)

    def __init__(self, inner: MeasureOracle) -> None:
        """
        Initialize an instance of `RoundedOracle`.

        :param inner: The exact oracle to round.
        """
        self.__inner: MeasureOracle = inner

    @property
    def inner(self) -> MeasureOracle:
        """The wrapped oracle."""
        return self.__inner

    @property
    @override
    def is_exact(self) -> bool:
        return False

    @override
    def mass(self, rect: Rect, precision: Fraction = Fraction(0)) -> RationalInterval:
        value = self.__inner.exact_mass(rect)
        if precision <= 0:
            return RationalInterval.point(value)
        k = max(0, -floor_log2(Fraction(precision)))
        lo = dyadic_floor(value, k)
        if lo >= 1:
            return RationalInterval.point(1)
        return RationalInterval(lo, min(lo + Fraction(1, 1 << k), Fraction(1)))

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "rounded", "inner": self.__inner.to_spec()}
