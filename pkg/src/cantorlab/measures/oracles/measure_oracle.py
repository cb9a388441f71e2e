from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from typing_extensions import override

from ...core.cantor import RationalInterval, Rect
from ...core.exceptions import CantorLabException
from ...core.utils import attributes_repr, formatted_repr


class MeasureOracle(ABC):
    """
    A computable probability measure on the product of two Cantor spaces.

    **Notes:**

    -   `mass(rect, precision)` returns an enclosure of the rectangle's mass whose width is at most
        `precision`; enclosures for finer precisions are nested in coarser ones.

    -   Exact oracles return point enclosures at every precision.
    """

    # Allow subclasses to define __slots__
    __slots__ = ()

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(exact=self.is_exact, kind=self.to_spec()["kind"]))

    @property
    @abstractmethod
    def is_exact(self) -> bool:
        """Whether every enclosure has width zero."""
        pass

    @abstractmethod
    def mass(self, rect: Rect, precision: Fraction = Fraction(0)) -> RationalInterval:
        """
        Return an enclosure of the mass of `rect`.

        :param rect: The rectangle `[a1]×[a2]`.
        :param precision: The maximal enclosure width, `>= 0`.
        :return: The enclosure.
        """
        pass

    @abstractmethod
    def to_spec(self) -> dict[str, Any]:
        """Return the JSON spec that rebuilds this oracle."""
        pass

    def exact_mass(self, rect: Rect) -> Fraction:
        """
        Return the exact mass of `rect`.

        :param rect: The rectangle.
        :return: The mass.
        :raises CantorLabException: If the oracle is not exact.
        """
        if not self.is_exact:
            raise CantorLabException(f"{type(self).__name__} does not provide exact masses.")
        return self.mass(rect).lo


class ExactMeasureOracle(MeasureOracle):
    """A measure oracle answering every query with the exact rational mass."""

    __slots__ = ()

    @property
    @override
    def is_exact(self) -> bool:
        return True

    @override
    def mass(self, rect: Rect, precision: Fraction = Fraction(0)) -> RationalInterval:
        return RationalInterval.point(self._exact_mass(rect))

    @override
    def exact_mass(self, rect: Rect) -> Fraction:
        return self._exact_mass(rect)

    @abstractmethod
    def _exact_mass(self, rect: Rect) -> Fraction:
        """Compute the exact mass of a rectangle."""
        pass
