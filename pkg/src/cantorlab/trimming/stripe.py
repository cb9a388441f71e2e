from dataclasses import dataclass
from fractions import Fraction

from ..core.cantor import EMPTY, BasicSet, BitString, RationalInterval, Rect
from ..core.exceptions import NotStableException
from ..measures import MeasureOracle, cond_interval


@dataclass(frozen=True, order=True, slots=True)
class Stripe:
    """The vertical stripe `[footprint]×Ω₂`."""

    footprint: BitString

    @property
    def level(self) -> int:
        """The length of the footprint."""
        return len(self.footprint)

    def as_set(self) -> BasicSet:
        """Return the stripe as a basic set."""
        return BasicSet.stripe(self.footprint)

    def height(self, oracle: MeasureOracle) -> Fraction:
        """Return `h(S) = P₁(footprint)` under an exact measure."""
        return oracle.exact_mass(Rect(self.footprint, EMPTY))

    def children(self) -> tuple["Stripe", "Stripe"]:
        """Return the two half stripes."""
        left, right = self.footprint.children()
        return Stripe(left), Stripe(right)

    def __str__(self) -> str:
        return f"[{self.footprint}]" if len(self.footprint) else "*"


def vertical_size(
    oracle: MeasureOracle, u: BasicSet, stripe: Stripe, precision: Fraction = Fraction(0)
) -> RationalInterval:
    """
    Enclose the vertical size `P(U ∩ S) / P(S)` of a set in a stripe.

    :param oracle: The measure.
    :param u: The set, stable in the stripe.
    :param stripe: The stripe.
    :param precision: The maximal enclosure width.
    :return: The enclosure.
    :raises NotStableException: If the sections of `u` vary inside the stripe.
    :raises ZeroMarginalException: If the stripe has zero mass.
    """
    section = u.section(stripe.footprint)
    if not section.stable:
        raise NotStableException(prefix=stripe.footprint.bits)
    return cond_interval(oracle, stripe.footprint, section.cylinders, precision)
