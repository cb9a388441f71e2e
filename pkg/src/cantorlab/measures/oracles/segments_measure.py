from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import Rect
from ...core.utils import overlap
from ..sequence_config import SequenceConfig
from .measure_oracle import ExactMeasureOracle


@final
class SegmentsMeasure(ExactMeasureOracle):
    """
    A measure concentrated on vertical segments below `α` and uniform above it.

    Level `k` carries mass `a_k - a_{k-1}`, split evenly over the `2^{k-1}` segments at
    `x = j·2^{-(k-1)}`, each uniform over `y ∈ [a_{k-1}, a_k)`. For a rectangle of width `2^-n`
    the levels `k > n` contribute exactly their uniform mass, so only `a_1…a_n` are consulted.
    """

    __slots__ = ("__cfg",)

    def __init__(self, cfg: SequenceConfig) -> None:
        """
        Initialize an instance of `SegmentsMeasure`.

        :param cfg: The sequence configuration.
        """
        self.__cfg: SequenceConfig = cfg

    @property
    def cfg(self) -> SequenceConfig:
        """The sequence configuration."""
        return self.__cfg

    @override
    def _exact_mass(self, rect: Rect) -> Fraction:
        n = len(rect.a1)
        (x0, x1), y = rect.a1.interval(), rect.a2.interval()
        total = Fraction(0)
        for k in self.__cfg.strips_meeting(y, n):
            # Only the segment at the left endpoint can fall into a cell this wide.
            if (x0 * (1 << (k - 1))).denominator == 1:
                total += overlap(y, (self.__cfg.term(k - 1), self.__cfg.term(k))) / (1 << (k - 1))
        return total + overlap(y, (self.__cfg.term(n), Fraction(1))) * (x1 - x0)

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "segments", **self.__cfg.to_json()}


def segments(cfg: SequenceConfig | None = None) -> SegmentsMeasure:
    """Return the segments measure for `cfg` (the default sequence if omitted)."""
    return SegmentsMeasure(cfg or SequenceConfig.default())
