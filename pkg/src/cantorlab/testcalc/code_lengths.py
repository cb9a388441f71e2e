import heapq
from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from fractions import Fraction
from functools import cache

from typing_extensions import override

from ..core.exceptions import CantorLabException
from ..core.utils import ceil_log2


class CodeLengthProvider(ABC):
    """Assigns prefix-free code lengths to the elements of a finite set."""

    @abstractmethod
    def length(self, x: str, elements: Sequence[str]) -> int:
        """
        Return the code length of `x` as an element of `elements`.

        :param x: The element.
        :param elements: The finite set, without duplicates.
        :return: The length in bits.
        """
        pass

    def kraft_sum(self, elements: Sequence[str]) -> Fraction:
        """Return `Σ 2^{-length(x)}` over the set."""
        return sum((Fraction(1, 1 << self.length(x, elements)) for x in elements), Fraction(0))


class UniformCodeLengths(CodeLengthProvider):
    """Gives every element `⌈log₂|A|⌉` bits."""

    @override
    def length(self, x: str, elements: Sequence[str]) -> int:
        return ceil_log2(Fraction(len(elements))) if len(elements) > 1 else 0


def lz78_phrase_count(word: str) -> int:
    """
    Count the phrases of the incremental parse of `word`; a trailing partial phrase counts once.

    :param word: The word.
    :return: The count.
    """
    phrases: set[str] = set()
    current = ""
    count = 0
    for symbol in word:
        current += symbol
        if current not in phrases:
            phrases.add(current)
            count += 1
            current = ""
    return count + (1 if current else 0)


@cache
def elias_omega(n: int) -> str:
    """
    Return the Elias omega code of a positive integer.

    :param n: The integer, `>= 1`.
    :return: The codeword.
    """
    if n < 1:
        raise CantorLabException("Elias omega codes positive integers only.")
    code = "0"
    while n > 1:
        group = format(n, "b")
        code = group + code
        n = len(group) - 1
    return code


class EliasOmegaCodeLengths(CodeLengthProvider):
    """
    Ranks the set by phrase count, then lexicographically, and codes rank `r` with the omega code of `r + 1`.

    Simple words get short codes; the lengths satisfy the Kraft inequality on every set.
    """

    @override
    def length(self, x: str, elements: Sequence[str]) -> int:
        ranking = sorted(elements, key=lambda w: (lz78_phrase_count(w), w))
        return len(elias_omega(ranking.index(x) + 1))


class HuffmanCodeLengths(CodeLengthProvider):
    """Huffman code lengths for given weights; elements without weight get no code."""

    # Attributes for the HuffmanCodeLengths
    __slots__ = ("__weights", "__cache")

    def __init__(self, weights: Mapping[str, Fraction | int]) -> None:
        """
        Initialize an instance of `HuffmanCodeLengths`.

        :param weights: A nonnegative weight per element.
        """
        if any(w < 0 for w in weights.values()):
            raise CantorLabException("Huffman weights must be non-negative.")
        self.__weights: dict[str, Fraction] = {x: Fraction(w) for x, w in weights.items()}
        self.__cache: dict[tuple[str, ...], dict[str, int]] = {}

    def lengths(self, elements: Sequence[str]) -> dict[str, int]:
        """
        Return the Huffman code length of every positively weighted element.

        :param elements: The set.
        :return: The lengths; a single symbol gets one bit.
        """
        key = tuple(sorted(elements))
        if key in self.__cache:
            return self.__cache[key]
        heap: list[tuple[Fraction, int, tuple[str, ...]]] = [
            (self.__weights[x], i, (x,)) for i, x in enumerate(key) if self.__weights.get(x, 0) > 0
        ]
        heapq.heapify(heap)
        lengths = {symbols[0]: 0 for _, _, symbols in heap}
        if len(heap) == 1:
            lengths[heap[0][2][0]] = 1
        counter = len(key)
        while len(heap) > 1:
            w1, _, s1 = heapq.heappop(heap)
            w2, _, s2 = heapq.heappop(heap)
            for symbol in s1 + s2:
                lengths[symbol] += 1
            heapq.heappush(heap, (w1 + w2, counter, s1 + s2))
            counter += 1
        self.__cache[key] = lengths
        return lengths

    @override
    def length(self, x: str, elements: Sequence[str]) -> int:
        lengths = self.lengths(elements)
        if x not in lengths:
            raise CantorLabException(f"Element {x!r} has no Huffman code.")
        return lengths[x]

    @override
    def kraft_sum(self, elements: Sequence[str]) -> Fraction:
        return sum((Fraction(1, 1 << n) for n in self.lengths(elements).values()), Fraction(0))
