from random import Random

from .basic_set import BasicSet
from .bit_string import BitString
from .cylinder_set import CylinderSet
from .rect import Rect


def random_word(rng: Random, max_depth: int, min_depth: int = 0) -> BitString:
    """
    Draw a word with length uniform in `[min_depth, max_depth]` and uniform bits.

    :param rng: The seeded generator.
    :param max_depth: The maximal length.
    :param min_depth: The minimal length.
    :return: The word.
    """
    n = rng.randint(min_depth, max_depth)
    return BitString("".join(rng.choice("01") for _ in range(n)))


def random_rect(rng: Random, max_depth: int, min_depth: int = 0) -> Rect:
    """Draw a rectangle whose two words are drawn independently by `random_word`."""
    return Rect(random_word(rng, max_depth, min_depth), random_word(rng, max_depth, min_depth))


def random_cylinder_set(rng: Random, max_cylinders: int, max_depth: int) -> CylinderSet:
    """Draw a union of at most `max_cylinders` random cylinders of depth at least 1."""
    count = rng.randint(0, max_cylinders)
    return CylinderSet(random_word(rng, max_depth, min(1, max_depth)) for _ in range(count))


def random_basic_set(rng: Random, max_rects: int, max_depth: int, min_depth: int = 0) -> BasicSet:
    """
    Draw a basic set made of at most `max_rects` random rectangles.

    :param rng: The seeded generator.
    :param max_rects: The maximal number of rectangles drawn before canonicalization.
    :param max_depth: The maximal coordinate depth.
    :param min_depth: The minimal coordinate depth.
    :return: The canonical set.
    """
    count = rng.randint(0, max_rects)
    return BasicSet(random_rect(rng, max_depth, min_depth) for _ in range(count))
