from fractions import Fraction

from ..core.cantor import EMPTY, BasicSet
from ..core.exceptions import ZeroMarginalException
from ..measures import MeasureOracle
from .stripe import Stripe, vertical_size
from .trim_config import CoverSequence, TrimConfig
from .trimmer import TrimResult


def _small(oracle: MeasureOracle, u: BasicSet, stripe: Stripe, epsilon: Fraction) -> bool:
    if not u.is_stable(stripe.footprint):
        return False
    try:
        return vertical_size(oracle, u, stripe).hi < epsilon
    except ZeroMarginalException:
        return False


def naive_trim(oracle: MeasureOracle, covers: CoverSequence, cfg: TrimConfig) -> TrimResult:
    """
    Trim each stage on its own, keeping `U_k` in the maximal stripes where its vertical size is below `ε`.

    `Û_k = Û_{k−1} ∪ (U_k ∩ G_k)`. Stages do not constrain each other, so overlapping stripes of
    different stages can push the trimmed measure above `ε`.

    :param oracle: The exact measure.
    :param covers: The increasing cover sequence.
    :param cfg: The configuration; only `epsilon` and `maxdepth` are used.
    :return: The result.
    """
    stripes: list[tuple[Stripe, ...]] = []
    g: list[BasicSet] = []
    u_hat: list[BasicSet] = []
    for u in covers:
        found: list[Stripe] = []
        frontier = [Stripe(EMPTY)]
        while frontier:
            following: list[Stripe] = []
            for stripe in frontier:
                if _small(oracle, u, stripe, cfg.epsilon):
                    found.append(stripe)
                elif stripe.level < cfg.maxdepth:
                    following.extend(stripe.children())
            frontier = following
        g_k = BasicSet(r for s in found for r in s.as_set())
        stripes.append(tuple(found))
        g.append(g_k)
        u_hat.append((u_hat[-1] if u_hat else BasicSet.empty()) | (u & g_k))
    return TrimResult(covers=covers, stripes=tuple(stripes), g=tuple(g), u_hat=tuple(u_hat))
