from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ..core.cantor import EMPTY, BasicSet, BitString, CylinderSet, RationalInterval, Rect
from ..core.exceptions import CantorLabException, ZeroMarginalException
from .cantor_measures import CantorMeasure
from .oracles import MeasureOracle

MAX_REFINEMENTS: int = 64
"""How many times a precision request is halved before an enclosure is given up on."""


def marginal(oracle: MeasureOracle, a1: BitString, precision: Fraction = Fraction(0)) -> RationalInterval:
    """
    Return an enclosure of the first marginal `P₁(a1) = P([a1]×Ω₂)`.

    :param oracle: The measure.
    :param a1: The first-coordinate word.
    :param precision: The maximal enclosure width.
    :return: The enclosure.
    """
    return oracle.mass(Rect(a1, EMPTY), precision)


def set_mass(oracle: MeasureOracle, u: BasicSet, precision: Fraction = Fraction(0)) -> RationalInterval:
    """
    Return an enclosure of the mass of a basic set.

    :param oracle: The measure.
    :param u: The set.
    :param precision: The maximal enclosure width.
    :return: The enclosure (a point for exact oracles).
    """
    if oracle.is_exact:
        return RationalInterval.point(u.measure(oracle.exact_mass))
    share = precision / max(len(u), 1)
    return sum((oracle.mass(r, share) for r in u), RationalInterval.point(0))


def _target_mass(oracle: MeasureOracle, a1: BitString, target: CylinderSet, precision: Fraction) -> RationalInterval:
    share = precision / max(len(target), 1)
    total = sum((oracle.mass(Rect(a1, w), share) for w in target), RationalInterval.point(0))
    return RationalInterval(max(total.lo, Fraction(0)), max(total.hi, Fraction(0)))


def cond_interval(
    oracle: MeasureOracle, a1: BitString, a2: BitString | CylinderSet, precision: Fraction = Fraction(0)
) -> RationalInterval:
    """
    Enclose the interval-conditioned probability `P_{a1}(a2) = P(a1, a2) / P₁(a1)`.

    :param oracle: The measure.
    :param a1: The conditioning word on `Ω₁`.
    :param a2: The target cylinder, or a finite union of cylinders, on `Ω₂`.
    :param precision: The maximal enclosure width (exact oracles always return a point).
    :return: The enclosure, within `[0, 1]`.
    :raises ZeroMarginalException: If `P₁(a1)` cannot be bounded away from zero.
    """
    target = a2 if isinstance(a2, CylinderSet) else CylinderSet([a2])
    if oracle.is_exact:
        denominator = oracle.exact_mass(Rect(a1, EMPTY))
        if denominator <= 0:
            raise ZeroMarginalException(prefix=a1.bits)
        return RationalInterval.point(target.measure(lambda w: oracle.exact_mass(Rect(a1, w))) / denominator)

    query = precision / 4
    for _ in range(MAX_REFINEMENTS):
        denominator_enclosure = oracle.mass(Rect(a1, EMPTY), query)
        if denominator_enclosure.hi <= 0:
            raise ZeroMarginalException(prefix=a1.bits)
        if denominator_enclosure.lo > 0:
            ratio = _target_mass(oracle, a1, target, query).divide(denominator_enclosure).clamp(0, 1)
            if ratio.width <= precision:
                return ratio
        if query == 0:
            break
        query /= 2
    if oracle.mass(Rect(a1, EMPTY), query).lo <= 0:
        raise ZeroMarginalException(prefix=a1.bits)
    raise CantorLabException(f"Could not enclose the conditional at {a1} within {precision}.")


@final
class MarginalMeasure(CantorMeasure):
    """The first marginal `P₁` of an exact product-space oracle, as a one-factor measure."""

    __slots__ = ("__oracle",)

    def __init__(self, oracle: MeasureOracle) -> None:
        """
        Initialize an instance of `MarginalMeasure`.

        :param oracle: An exact measure on the product.
        """
        if not oracle.is_exact:
            raise CantorLabException("Marginal measures need an exact oracle.")
        self.__oracle: MeasureOracle = oracle

    @property
    def oracle(self) -> MeasureOracle:
        """The product-space oracle."""
        return self.__oracle

    @override
    def _mass(self, word: BitString) -> Fraction:
        return self.__oracle.exact_mass(Rect(word, EMPTY))

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "marginal", "of": self.__oracle.to_spec()}
