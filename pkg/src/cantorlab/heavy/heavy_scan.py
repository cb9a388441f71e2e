from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from sys import gettrace
from typing import Any

from ..conditional import Martingale
from ..core.cantor import EMPTY, BasicSet, BitString, CylinderSet, Rect
from ..core.exceptions import PreconditionException
from ..core.loggers import Logger
from ..core.utils import attributes_repr, format_rational, formatted_repr
from ..measures import MarginalMeasure, MeasureOracle


def _require_exact(oracle: MeasureOracle) -> None:
    if not oracle.is_exact:
        raise PreconditionException("Heavy-interval scans need an exact measure.")


def _meet_mass(oracle: MeasureOracle, rects: Iterable[Rect], footprint: BitString) -> Fraction:
    # Canonical rectangles are disjoint; each meets the stripe in the rectangle over the longer word.
    return sum(
        (
            oracle.exact_mass(Rect(r.a1 if len(r.a1) >= len(footprint) else footprint, r.a2))
            for r in rects
            if r.a1.is_compatible(footprint)
        ),
        Fraction(0),
    )


def stripe_mass(oracle: MeasureOracle, u: BasicSet, footprint: BitString) -> Fraction:
    """Return the exact mass `P(U ∩ ([footprint]×Ω₂))`."""
    return _meet_mass(oracle, u.rects, footprint)


def is_heavy(oracle: MeasureOracle, u: BasicSet, n: int, footprint: BitString) -> bool:
    """
    Check whether `P(U ∩ (I×Ω₂)) > 2⁻ⁿ·P₁(I)` for `I = [footprint]`.

    :param oracle: The exact measure.
    :param u: The tested set.
    :param n: The heaviness level.
    :param footprint: The interval on `Ω₁`.
    :return: Whether the interval is `n`-heavy; zero-marginal intervals never are.
    """
    _require_exact(oracle)
    threshold = oracle.exact_mass(Rect(footprint, EMPTY)) / (1 << n)
    return stripe_mass(oracle, u, footprint) > threshold


@dataclass(frozen=True, slots=True)
class HeavyScan:
    """The maximal `n`-heavy intervals of a set, with the union's marginal measure."""

    n: int
    u: BasicSet
    mass: Fraction
    heavy: tuple[BitString, ...]
    union_measure: Fraction
    skipped: tuple[BitString, ...] = ()

    @property
    def bound(self) -> Fraction:
        """The bound `2⁻ⁿ`."""
        return Fraction(1, 1 << self.n)

    @property
    def applies(self) -> bool:
        """Whether `P(U) <= 2⁻²ⁿ`, the hypothesis under which the bound is claimed."""
        return self.mass <= Fraction(1, 1 << (2 * self.n))

    @property
    def ok(self) -> bool:
        """Whether the union bound holds, or is not claimed."""
        return not self.applies or self.union_measure <= self.bound

    def covers(self, prefix: BitString) -> bool:
        """Check whether `prefix` lies inside a reported heavy interval."""
        return any(h.is_prefix_of(prefix) for h in self.heavy)

    def to_json(self) -> dict[str, Any]:
        """Return `{n, heavy, union_measure, bound, ok}`."""
        return {
            "n": self.n,
            "heavy": [h.bits for h in self.heavy],
            "union_measure": format_rational(self.union_measure),
            "bound": f"2^-{self.n}",
            "ok": self.ok,
        }


class HeavyScanner:
    """
    Top-down scanner for maximal heavy intervals of one measure.

    **Notes:**

    -   Intervals are visited breadth-first, left child first. Children of a heavy interval are
        not visited, so every reported interval is maximal.

    -   Intervals of zero marginal are skipped and listed in the scan.

    -   An interval `U` puts no mass on is not refined, since none of its subintervals can be heavy.
        Each child only carries the rectangles of `U` that meet it.
    """

    # Attributes for the HeavyScanner
    __slots__ = ("__oracle", "__marginal", "__logger")

    def __init__(self, oracle: MeasureOracle, debug: bool | None = None) -> None:
        """
        Initialize an instance of `HeavyScanner`.

        :param oracle: The exact measure.
        :param debug: Whether debug logging is enabled. Defaults to whether a tracer is attached.
        :raises PreconditionException: If the oracle is not exact.
        """
        _require_exact(oracle)
        self.__oracle: MeasureOracle = oracle
        self.__marginal: MarginalMeasure = MarginalMeasure(oracle)
        self.__logger: Logger = Logger(source=self, debug=debug if debug is not None else gettrace() is not None)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(oracle=self.__oracle))

    def scan(self, u: BasicSet, n: int, maxdepth: int) -> HeavyScan:
        """
        Enumerate the maximal `n`-heavy intervals of `u` up to `maxdepth`.

        :param u: The tested set.
        :param n: The heaviness level, `>= 0`.
        :param maxdepth: The deepest interval length visited.
        :return: The scan.
        """
        if n < 0:
            raise PreconditionException("The heaviness level must be non-negative.")
        heavy: list[BitString] = []
        skipped: list[BitString] = []
        frontier: list[tuple[BitString, tuple[Rect, ...]]] = [(EMPTY, u.rects)]
        while frontier:
            following: list[tuple[BitString, tuple[Rect, ...]]] = []
            for word, rects in frontier:
                marginal = self.__marginal.mass(word)
                if marginal == 0:
                    skipped.append(word)
                    self.__logger.debug(msg=f"Interval {word or '*'} has zero marginal.", action="Skip:")
                    continue
                mass = _meet_mass(self.__oracle, rects, word)
                if mass > marginal / (1 << n):
                    heavy.append(word)
                elif mass and len(word) < maxdepth:
                    following.extend(
                        (child, tuple(r for r in rects if r.a1.is_compatible(child))) for child in word.children()
                    )
            frontier = following
        union = self.__marginal.measure(CylinderSet(heavy))
        self.__logger.debug(
            msg=f"{len(heavy)} heavy intervals, union {format_rational(union)}.", action="Scan:"
        )
        return HeavyScan(
            n=n,
            u=u,
            mass=u.measure(self.__oracle.exact_mass),
            heavy=tuple(heavy),
            union_measure=union,
            skipped=tuple(skipped),
        )


def enumerate_heavy(oracle: MeasureOracle, u: BasicSet, n: int, maxdepth: int) -> HeavyScan:
    """
    Enumerate the maximal intervals `I` with `P(U ∩ (I×Ω₂)) > 2⁻ⁿ·P₁(I)` up to `maxdepth`.

    :param oracle: The exact measure.
    :param u: The tested set.
    :param n: The heaviness level.
    :param maxdepth: The deepest interval length visited.
    :return: The scan.
    """
    return HeavyScanner(oracle).scan(u, n, maxdepth)


def heaviness_martingale(oracle: MeasureOracle, u: BasicSet, depth: int) -> Martingale:
    """
    Return the fraction of `U` in each stripe, `I ↦ P(U ∩ (I×Ω₂)) / P₁(I)`, as a martingale.

    Its initial value is `P(U)` and an interval is `n`-heavy exactly when the value exceeds `2⁻ⁿ`.

    :param oracle: The exact measure.
    :param u: The set.
    :param depth: The tree depth.
    :return: The martingale over the first marginal.
    """
    _require_exact(oracle)
    reference = MarginalMeasure(oracle)
    return Martingale.from_callable(
        depth, lambda word: stripe_mass(oracle, u, word) / reference.mass(word), reference
    )
