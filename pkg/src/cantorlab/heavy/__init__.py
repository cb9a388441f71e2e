"""Heavy intervals of a tested set, section bounds along paths, and the discard-below transform."""

from .discard_below import GRID_DEPTH, cylinders_below, discard_below
from .heavy_scan import HeavyScan, HeavyScanner, enumerate_heavy, heaviness_martingale, is_heavy, stripe_mass
from .random_sets import random_small_set
from .section_bound import SectionBoundReport, section_bound_check

__all__ = [
    "GRID_DEPTH",
    "cylinders_below",
    "discard_below",
    "HeavyScan",
    "HeavyScanner",
    "enumerate_heavy",
    "heaviness_martingale",
    "is_heavy",
    "stripe_mass",
    "random_small_set",
    "SectionBoundReport",
    "section_bound_check",
]
