from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import Rect
from ..cantor_measures import CantorMeasure, UniformMeasure
from .measure_oracle import ExactMeasureOracle


@final
class ProductMeasure(ExactMeasureOracle):
    """The product `P₁×P₂` of two one-factor measures: `mass(a1, a2) = P₁(a1)·P₂(a2)`."""

    __slots__ = ("__p1", "__p2")

    def __init__(self, p1: CantorMeasure, p2: CantorMeasure) -> None:
        """
        Initialize an instance of `ProductMeasure`.

        :param p1: The first factor.
        :param p2: The second factor.
        """
        self.__p1: CantorMeasure = p1
        self.__p2: CantorMeasure = p2

    @property
    def p1(self) -> CantorMeasure:
        """The first factor."""
        return self.__p1

    @property
    def p2(self) -> CantorMeasure:
        """The second factor."""
        return self.__p2

    @override
    def _exact_mass(self, rect: Rect) -> Fraction:
        return self.__p1.mass(rect.a1) * self.__p2.mass(rect.a2)

    @override
    def to_spec(self) -> dict[str, Any]:
        if isinstance(self.__p1, UniformMeasure) and isinstance(self.__p2, UniformMeasure):
            return {"kind": "uniform"}
        return {"kind": "product", "p1": self.__p1.to_spec(), "p2": self.__p2.to_spec()}


def uniform() -> ProductMeasure:
    """Return the uniform measure on the square."""
    return ProductMeasure(UniformMeasure(), UniformMeasure())


def product(p1: CantorMeasure, p2: CantorMeasure) -> ProductMeasure:
    """Return the product measure `p1×p2`."""
    return ProductMeasure(p1, p2)
