from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Self

from ..exceptions import CantorLabException
from ..utils import format_rational


@dataclass(frozen=True, slots=True)
class RationalInterval:
    """
    A closed enclosure `[lo, hi]` of an approximated rational quantity.

    **Notes:**

    -   A point interval (`lo == hi`) is what exact oracles return at every precision.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise CantorLabException(f"Interval bounds are reversed: [{self.lo}, {self.hi}].")

    @classmethod
    def point(cls, value: Fraction | int) -> Self:
        """Return the degenerate interval `[value, value]`."""
        return cls(Fraction(value), Fraction(value))

    @classmethod
    def unit(cls) -> Self:
        """Return `[0, 1]`."""
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def hull(cls, intervals: Iterable["RationalInterval"]) -> Self:
        """
        Return the smallest interval containing all the given ones.

        :param intervals: A nonempty collection of intervals.
        :return: The hull.
        """
        items = list(intervals)
        if not items:
            raise CantorLabException("The hull of no intervals is undefined.")
        return cls(min(i.lo for i in items), max(i.hi for i in items))

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    @property
    def width(self) -> Fraction:
        """The width `hi - lo`."""
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        """The midpoint."""
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        """Whether the interval has width zero."""
        return self.lo == self.hi

    def contains(self, value: "Fraction | int | RationalInterval") -> bool:
        """
        Check whether a value (or a whole interval) lies in the enclosure.

        :param value: A rational or an interval.
        :return: `True` on containment.
        """
        if isinstance(value, RationalInterval):
            return self.lo <= value.lo and value.hi <= self.hi
        return self.lo <= value <= self.hi

    def intersects(self, other: "RationalInterval") -> bool:
        """Check whether the two closed intervals share a point."""
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "RationalInterval") -> "RationalInterval | None":
        """
        Return the common part of two intervals.

        :param other: The other interval.
        :return: The intersection, or `None` if they are disjoint.
        """
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return RationalInterval(lo, hi) if lo <= hi else None

    def scale(self, factor: Fraction | int) -> "RationalInterval":
        """
        Multiply the enclosure by a nonnegative rational.

        :param factor: The factor, `>= 0`.
        :return: The scaled interval.
        """
        if factor < 0:
            raise CantorLabException("Interval scaling expects a nonnegative factor.")
        return RationalInterval(self.lo * factor, self.hi * factor)

    def divide(self, denominator: "RationalInterval") -> "RationalInterval":
        """
        Enclose the quotient of a nonnegative interval by a positive interval.

        :param denominator: The divisor, with `lo > 0`.
        :return: `[self.lo / denominator.hi, self.hi / denominator.lo]`.
        :raises CantorLabException: If the divisor is not bounded away from zero.
        """
        if denominator.lo <= 0:
            raise CantorLabException(f"Cannot divide by an interval touching zero: {denominator}.")
        if self.lo < 0:
            raise CantorLabException(f"Interval division expects a nonnegative numerator: {self}.")
        return RationalInterval(self.lo / denominator.hi, self.hi / denominator.lo)

    def clamp(self, lo: Fraction | int = 0, hi: Fraction | int = 1) -> "RationalInterval":
        """Intersect with `[lo, hi]`, collapsing to the nearest endpoint if the result is empty."""
        new_lo = min(max(self.lo, Fraction(lo)), Fraction(hi))
        new_hi = max(min(self.hi, Fraction(hi)), Fraction(lo))
        return RationalInterval(new_lo, new_hi)
