from fractions import Fraction
from random import Random

from ..core.cantor import BasicSet, random_basic_set
from ..measures import MeasureOracle

MAX_ATTEMPTS: int = 200


def random_small_set(
    rng: Random, oracle: MeasureOracle, n: int, max_rects: int = 6, max_depth: int = 6
) -> BasicSet:
    """
    Draw a random basic set with `P(U) <= 2⁻²ⁿ`.

    Rectangles are drawn with `x`-depth at least `n`; draws over the mass bound are rejected.

    :param rng: The seeded generator.
    :param oracle: The exact measure.
    :param n: The heaviness level.
    :param max_rects: The maximal number of rectangles.
    :param max_depth: The maximal coordinate depth.
    :return: The set; the empty set if every attempt was rejected.
    """
    limit = Fraction(1, 1 << (2 * n))
    for _ in range(MAX_ATTEMPTS):
        u = random_basic_set(rng, max_rects, max(max_depth, n), min(n, max_depth))
        if u.measure(oracle.exact_mass) <= limit:
            return u
    return BasicSet.empty()
