from dataclasses import dataclass
from fractions import Fraction
from sys import gettrace

from ..core.cantor import EMPTY, BasicSet, RationalInterval
from ..core.exceptions import ConfigException, ZeroMarginalException
from ..core.loggers import Logger
from ..core.utils import attributes_repr, formatted_repr
from ..measures import MeasureOracle
from .gamma_oracle import GammaOracle
from .stripe import Stripe, vertical_size
from .trim_config import CoverSequence, TrimConfig


@dataclass(frozen=True, slots=True)
class GoodWitness:
    """Why a stripe is or is not good for a set: the Γ-bounds and the vertical size, or a reason."""

    stripe: Stripe
    good: bool
    gamma: RationalInterval | None = None
    size: RationalInterval | None = None
    reason: str = ""

    @property
    def spread(self) -> Fraction | None:
        """The length of the smallest interval holding the four numbers."""
        if self.gamma is None or self.size is None:
            return None
        return max(self.gamma.hi, self.size.hi) - min(self.gamma.lo, self.size.lo)


def is_good(
    oracle: MeasureOracle,
    gamma: GammaOracle,
    u: BasicSet,
    stripe: Stripe,
    delta: Fraction,
    epsilon: Fraction,
) -> GoodWitness:
    """
    Decide whether a stripe is good for a set.

    The stripe is good when `u` is stable in it, the Γ-bounds and the vertical-size enclosure of
    the section fit together in an interval of length at most `delta`, and the vertical size is
    below `epsilon`.

    :param oracle: The measure.
    :param gamma: The Γ-oracle.
    :param u: The set.
    :param stripe: The stripe.
    :param delta: The closeness tolerance.
    :param epsilon: The threshold.
    :return: The witness.
    """
    section = u.section(stripe.footprint)
    if not section.stable:
        return GoodWitness(stripe, False, reason="not stable")
    try:
        size = vertical_size(oracle, u, stripe, Fraction(1, 1 << stripe.level))
    except ZeroMarginalException:
        return GoodWitness(stripe, False, reason="zero marginal")
    bounds = gamma.bounds(stripe.footprint, section.cylinders)
    witness = GoodWitness(stripe, False, bounds, size)
    spread = witness.spread
    if spread is not None and spread <= delta and size.hi < epsilon:
        return GoodWitness(stripe, True, bounds, size)
    return witness


@dataclass(frozen=True, slots=True)
class TrimResult:
    """
    The stripe unions `G₁ ⊇ G₂ ⊇ …` and the trimmed sets `Û₁ ⊆ Û₂ ⊆ …` of a trim.

    **Notes:**

    -   `stripes[i]` lists the maximal stripes making up `g[i]`, in scan order.
    """

    covers: CoverSequence
    stripes: tuple[tuple[Stripe, ...], ...]
    g: tuple[BasicSet, ...]
    u_hat: tuple[BasicSet, ...]

    @property
    def stages(self) -> int:
        """The number of stages."""
        return len(self.g)

    def trimmed(self, k: int) -> BasicSet:
        """Return `Û_k`, counting from 1."""
        return self.u_hat[k - 1]

    def good_set(self, k: int) -> BasicSet:
        """Return `G_k`, counting from 1."""
        return self.g[k - 1]


class Trimmer:
    """
    Staged trimming of an increasing cover sequence.

    **Notes:**

    -   Stage 1 collects the maximal `U₁`-good stripes by a breadth-first search, left child
        first, down to `maxdepth`. Stage `k` searches inside each stage-`(k−1)` stripe for the
        maximal stripes that are `U_{k−1}`-good with `δ_{k−1}` and `U_k`-good with `δ_k`.

    -   A stripe that is not good by `maxdepth` is left out. Trimming only shrinks the sets, so
        the measure bounds do not depend on the search depth.
    """

    # Attributes for the Trimmer
    __slots__ = ("__oracle", "__gamma", "__cfg", "__logger")

    def __init__(self, oracle: MeasureOracle, gamma: GammaOracle, cfg: TrimConfig, debug: bool | None = None) -> None:
        """
        Initialize an instance of `Trimmer`.

        :param oracle: The measure.
        :param gamma: The Γ-oracle.
        :param cfg: The trim configuration.
        :param debug: Whether debug logging is enabled. Defaults to whether a tracer is attached.
        """
        self.__oracle: MeasureOracle = oracle
        self.__gamma: GammaOracle = gamma
        self.__cfg: TrimConfig = cfg
        self.__logger: Logger = Logger(source=self, debug=debug if debug is not None else gettrace() is not None)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(oracle=self.__oracle, cfg=self.__cfg))

    def _good(self, covers: CoverSequence, stripe: Stripe, k: int) -> bool:
        eps = self.__cfg.epsilon
        stages = range(max(1, k - 1), k + 1)
        return all(
            is_good(self.__oracle, self.__gamma, covers.stage(i), stripe, self.__cfg.delta(i), eps).good
            for i in stages
        )

    def _search(self, covers: CoverSequence, root: Stripe, k: int) -> list[Stripe]:
        found: list[Stripe] = []
        frontier = [root]
        while frontier:
            following: list[Stripe] = []
            for stripe in frontier:
                if self._good(covers, stripe, k):
                    found.append(stripe)
                elif stripe.level < self.__cfg.maxdepth:
                    following.extend(stripe.children())
            frontier = following
        return found

    def run(self, covers: CoverSequence) -> TrimResult:
        """
        Trim every stage of `covers`.

        :param covers: The increasing cover sequence.
        :return: The result.
        """
        if len(covers) > len(self.__cfg.deltas):
            raise ConfigException(f"{len(covers)} cover stages need as many deltas, got {len(self.__cfg.deltas)}.")
        stripes: list[tuple[Stripe, ...]] = []
        g: list[BasicSet] = []
        for k in range(1, len(covers) + 1):
            roots = stripes[-1] if stripes else (Stripe(EMPTY),)
            found = tuple(s for root in roots for s in self._search(covers, root, k))
            stripes.append(found)
            g.append(BasicSet(r for s in found for r in s.as_set()))
            self.__logger.debug(msg=f"Stage {k}: {len(found)} maximal good stripes.", action="Trim:")

        u_hat: list[BasicSet] = []
        for k in range(1, len(covers) + 1):
            parts = covers.stage(k) & g[k - 1]
            for i in range(1, k):
                parts = parts | (covers.stage(i) & (g[i - 1] - g[i]))
            u_hat.append(parts)
        return TrimResult(covers=covers, stripes=tuple(stripes), g=tuple(g), u_hat=tuple(u_hat))


def trim(oracle: MeasureOracle, gamma: GammaOracle, covers: CoverSequence, cfg: TrimConfig) -> TrimResult:
    """
    Trim an increasing cover sequence against a Γ-oracle.

    :param oracle: The measure.
    :param gamma: The Γ-oracle.
    :param covers: The increasing cover sequence.
    :param cfg: The trim configuration.
    :return: The result.
    """
    return Trimmer(oracle, gamma, cfg).run(covers)
