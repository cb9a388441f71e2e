from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..core.cantor import RationalInterval
from ..core.exceptions import CantorLabException, KraftViolationException
from ..core.utils import ceil_log2, floor_log2
from .code_lengths import CodeLengthProvider

KRAFT_CHECK_LIMIT: int = 1 << 12
"""Largest set whose Kraft sum is checked by enumeration."""


@dataclass(frozen=True, slots=True)
class FiniteDeficiency:
    """The deficiency `log₂|A| − ℓ(x)` of `x` as an element of `A`."""

    x: str
    size: int
    code_length: int
    enclosure: RationalInterval

    @property
    def test_value(self) -> Fraction:
        """Return `|A|·2^{−ℓ(x)}`, which equals `2^{d(x|A)}`."""
        return Fraction(self.size, 1 << self.code_length)


def finite_deficiency(x: str, elements: Sequence[str], codelen: CodeLengthProvider) -> FiniteDeficiency:
    """
    Return the deficiency of `x` in the finite set `elements` under a prefix-free code.

    :param x: The element.
    :param elements: The set, without duplicates.
    :param codelen: The code-length provider.
    :return: The deficiency, enclosed exactly (width 0 when `|A|` is a power of two).
    :raises CantorLabException: If `x` is not an element.
    :raises KraftViolationException: If the code lengths break the Kraft inequality on a set small
        enough to enumerate.
    """
    if x not in elements:
        raise CantorLabException(f"{x!r} is not an element of the set.")
    if len(elements) <= KRAFT_CHECK_LIMIT:
        total = codelen.kraft_sum(elements)
        if total > 1:
            raise KraftViolationException(total=total)
    size = len(elements)
    length = codelen.length(x, elements)
    lo, hi = floor_log2(Fraction(size)), ceil_log2(Fraction(size))
    return FiniteDeficiency(x, size, length, RationalInterval(Fraction(lo - length), Fraction(hi - length)))


def all_words(n: int) -> list[str]:
    """Return the binary words of length `n` in lexicographic order."""
    return [format(i, f"0{n}b") for i in range(1 << n)] if n else [""]
