"""Exact Cantor-space combinatorics: words, rectangles, clopen sets and cylinder functions."""

from .basic_set import BasicSet, Section, StripeDecomposition, canonicalize
from .bit_string import EMPTY, BitString
from .cylinder_function import CylinderFunction, cells_of_depth
from .cylinder_set import CylinderSet
from .random_sets import random_basic_set, random_cylinder_set, random_rect, random_word
from .rational_interval import RationalInterval
from .rect import FULL_SQUARE, Rect, format_cylinder, parse_cylinder

__all__ = [
    "BasicSet",
    "Section",
    "StripeDecomposition",
    "canonicalize",
    "EMPTY",
    "BitString",
    "CylinderFunction",
    "cells_of_depth",
    "CylinderSet",
    "random_basic_set",
    "random_cylinder_set",
    "random_rect",
    "random_word",
    "RationalInterval",
    "FULL_SQUARE",
    "Rect",
    "format_cylinder",
    "parse_cylinder",
]
