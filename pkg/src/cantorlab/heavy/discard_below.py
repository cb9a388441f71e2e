from fractions import Fraction

from ..core.cantor import BasicSet, BitString, CylinderSet, Rect, canonicalize
from ..core.utils import dyadic_ceil
from ..measures import SequenceConfig

GRID_DEPTH: int = 32
"""The y-grid `a_k` is rounded up to, unless the rectangle is finer."""


def cylinders_below(value: Fraction, depth: int) -> CylinderSet:
    """
    Return the cylinders covering `[0, value)` for a dyadic `value` of denominator at most `2^depth`.

    :param value: The dyadic bound.
    :param depth: The grid depth.
    :return: The canonical union.
    """
    if value <= 0:
        return CylinderSet.empty()
    if value >= 1:
        return CylinderSet.full()
    bits = format(int(value * (1 << depth)), f"0{depth}b")
    return CylinderSet(BitString(bits[:i] + "0") for i, bit in enumerate(bits) if bit == "1")


def discard_below(u: BasicSet, cfg: SequenceConfig, grid_depth: int = GRID_DEPTH) -> BasicSet:
    """
    Cut every rectangle of `x`-width `2⁻ᵏ` down to the part at or above `a_k`.

    The bound `a_k` is rounded up to the dyadic grid of depth `max(grid_depth, |a2|)`, so the
    result stays a basic set and contains only points above `a_k`. Full-width rectangles
    (`k = 0`) are kept whole.

    :param u: The canonical set.
    :param cfg: The sequence configuration.
    :param grid_depth: The minimal rounding grid.
    :return: The canonical trimmed set.
    :raises InsufficientTermsException: If a rectangle is narrower than the sequence is long.
    """
    rects: list[Rect] = []
    for rect in u:
        k = len(rect.a1)
        if k == 0:
            rects.append(rect)
            continue
        depth = max(grid_depth, len(rect.a2))
        kept = CylinderSet([rect.a2]) - cylinders_below(dyadic_ceil(cfg.term(k), depth), depth)
        rects.extend(Rect(rect.a1, w) for w in kept)
    return canonicalize(rects)
