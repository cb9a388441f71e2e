from abc import ABC, abstractmethod
from collections.abc import Callable
from fractions import Fraction
from threading import Lock

from typing_extensions import final, override

from ..conditional import PathGenerator
from ..core.cantor import BitString, CylinderSet, RationalInterval
from ..core.exceptions import ConfigException, ZeroMarginalException
from ..core.utils import attributes_repr, formatted_repr
from ..measures import MeasureOracle, ProductMeasure, cond_interval
from .slowdown import SlowdownSchedule, no_slowdown

CenterFunction = Callable[[BitString, CylinderSet], Fraction | None]
"""The value a Γ-oracle's enclosure is centred on; `None` for a zero-marginal prefix."""


class GammaOracle(ABC):
    """
    Lower and upper bounds on the conditional probability of a target on `Ω₂`, after reading a
    prefix of the conditioning sequence.

    **Notes:**

    -   Bounds are nested: an extension of a prefix never gets a wider enclosure than the prefix.

    -   Values lie in `[0, 1]`.
    """

    @abstractmethod
    def bounds(self, prefix: BitString, target: CylinderSet) -> RationalInterval:
        """
        Return the enclosure after reading `prefix`.

        :param prefix: The prefix of the conditioning sequence.
        :param target: The target on `Ω₂`.
        :return: The enclosure.
        """
        pass


class NestedGamma(GammaOracle):
    """
    A Γ-oracle centring each enclosure on a given function and widening it by a slowdown schedule.

    Each enclosure is intersected with its parent's. When the two do not meet, the schedule does not
    certify the prefix and the parent's enclosure is kept unchanged, so bounds never move away from
    a value they already enclosed. A zero-marginal prefix inherits its parent's.
    """

    # Attributes for the NestedGamma
    __slots__ = ("__center", "__slowdown", "__cache", "__thread_lock")

    def __init__(self, center: CenterFunction, slowdown: SlowdownSchedule = no_slowdown) -> None:
        """
        Initialize an instance of `NestedGamma`.

        :param center: The centre of the enclosure at a prefix.
        :param slowdown: The enclosure width at each level.
        """
        self.__center: CenterFunction = center
        self.__slowdown: SlowdownSchedule = slowdown
        self.__cache: dict[tuple[BitString, CylinderSet], RationalInterval] = {}
        self.__thread_lock: Lock = Lock()

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(center=self.__center, slowdown=self.__slowdown))

    @override
    def bounds(self, prefix: BitString, target: CylinderSet) -> RationalInterval:
        with self.__thread_lock:
            return self._bounds(prefix, target)

    def _bounds(self, prefix: BitString, target: CylinderSet) -> RationalInterval:
        key = (prefix, target)
        cached = self.__cache.get(key)
        if cached is not None:
            return cached
        parent = self._bounds(prefix.parent(), target) if len(prefix) else RationalInterval.unit()
        center = self.__center(prefix, target)
        if center is None:
            result = parent
        else:
            half = self.__slowdown(len(prefix)) / 2
            own = RationalInterval(center - half, center + half)
            result = own.intersect(parent) or parent
        self.__cache[key] = result
        return result


def _conditional_center(oracle: MeasureOracle) -> CenterFunction:
    def center(prefix: BitString, target: CylinderSet) -> Fraction | None:
        try:
            return cond_interval(oracle, prefix, target).mid
        except ZeroMarginalException:
            return None

    return center


def honest_gamma(oracle: MeasureOracle, slowdown: SlowdownSchedule = no_slowdown) -> GammaOracle:
    """
    Return the Γ-oracle centred on the interval-conditioned probabilities of `oracle`.

    Width-0 enclosures only nest when the conditional does not depend on the prefix, so `no_slowdown`
    is accepted for product measures alone.

    :param oracle: The exact measure.
    :param slowdown: The enclosure width at each level.
    :return: The oracle.
    :raises ConfigException: If `no_slowdown` is requested for a measure that is not a product.
    """
    if slowdown is no_slowdown and not isinstance(oracle, ProductMeasure):
        raise ConfigException(f"A {oracle.to_spec()['kind']} measure needs a positive slowdown schedule.")
    return NestedGamma(_conditional_center(oracle), slowdown)


@final
class AdversarialGamma(NestedGamma):
    """A Γ-oracle that is honest along one path and reports a decoy measure's conditionals elsewhere."""

    __slots__ = ("__path",)

    def __init__(
        self,
        oracle: MeasureOracle,
        path: PathGenerator,
        decoy: MeasureOracle,
        slowdown: SlowdownSchedule = no_slowdown,
    ) -> None:
        """
        Initialize an instance of `AdversarialGamma`.

        :param oracle: The true measure.
        :param path: The path along which the oracle is honest.
        :param decoy: The measure reported off the path.
        :param slowdown: The enclosure width at each level.
        """
        honest, dishonest = _conditional_center(oracle), _conditional_center(decoy)

        def center(prefix: BitString, target: CylinderSet) -> Fraction | None:
            on_path = path.prefix(len(prefix)) == prefix
            return honest(prefix, target) if on_path else dishonest(prefix, target)

        super().__init__(center, slowdown)
        self.__path: PathGenerator = path

    @property
    def path(self) -> PathGenerator:
        """The honest path."""
        return self.__path


def adversarial_gamma(
    oracle: MeasureOracle, path: PathGenerator, decoy: MeasureOracle, slowdown: SlowdownSchedule = no_slowdown
) -> GammaOracle:
    """Return a Γ-oracle honest along `path` and reporting `decoy` elsewhere."""
    return AdversarialGamma(oracle, path, decoy, slowdown)
