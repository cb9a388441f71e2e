from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import BitString, Rect
from ...core.utils import overlap
from ..sequence_config import SequenceConfig
from .measure_oracle import ExactMeasureOracle


@final
class StaircaseMeasure(ExactMeasureOracle):
    """
    A measure whose conditional along `000…` converges to the uniform distribution on `[α, 1]`.

    The horizontal strip `y ∈ [a_{k-1}, a_k)` has density 0 on `x ∈ [0, 2^-k)`, density 2 on
    `[2^-k, 2^-k+1)` and density 1 on `[2^-k+1, 1)`; above the last listed term the density is 1.
    A rectangle of width `2^-n` needs the first `n` terms; over it the strips `k > n` integrate
    to their uniform mass.
    """

    __slots__ = ("__cfg",)

    def __init__(self, cfg: SequenceConfig) -> None:
        """
        Initialize an instance of `StaircaseMeasure`.

        :param cfg: The sequence configuration.
        """
        self.__cfg: SequenceConfig = cfg

    @property
    def cfg(self) -> SequenceConfig:
        """The sequence configuration."""
        return self.__cfg

    @staticmethod
    def column_mass(k: int, x: tuple[Fraction, Fraction]) -> Fraction:
        """
        Integrate the strip-`k` density over an `x` interval.

        :param k: The strip index, `>= 1`.
        :param x: The half-open interval `[x0, x1)`.
        :return: `2·|x ∩ [2^-k, 2^-k+1)| + |x ∩ [2^-k+1, 1)|`.
        """
        low, high = Fraction(1, 1 << k), Fraction(2, 1 << k)
        return 2 * overlap(x, (low, high)) + overlap(x, (high, Fraction(1)))

    @override
    def _exact_mass(self, rect: Rect) -> Fraction:
        n = len(rect.a1)
        x, y = rect.a1.interval(), rect.a2.interval()
        total = Fraction(0)
        for k in self.__cfg.strips_meeting(y, n):
            total += overlap(y, (self.__cfg.term(k - 1), self.__cfg.term(k))) * self.column_mass(k, x)
        return total + overlap(y, (self.__cfg.term(n), Fraction(1))) * (x[1] - x[0])

    def strip_mass(self, k: int) -> Fraction:
        """
        Return the total mass of strip `k`, integrated column by column over the depth-`k` cells.

        :param k: The strip index, `1 <= k <= length`.
        :return: The mass, equal to `a_k - a_{k-1}`.
        """
        height = self.__cfg.term(k) - self.__cfg.term(k - 1)
        return sum((height * self.column_mass(k, w.interval()) for w in BitString.all_of_length(k)), Fraction(0))

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "staircase", **self.__cfg.to_json()}


def staircase(cfg: SequenceConfig | None = None) -> StaircaseMeasure:
    """Return the staircase measure for `cfg` (the default sequence if omitted)."""
    return StaircaseMeasure(cfg or SequenceConfig.default())
