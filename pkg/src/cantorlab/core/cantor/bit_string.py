from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from typing_extensions import Self

from ..exceptions import CantorLabException


@lru_cache(maxsize=1 << 16)
def _dyadic_interval(bits: str) -> tuple[Fraction, Fraction]:
    scale = Fraction(1, 1 << len(bits))
    index = int(bits, 2) if bits else 0
    return index * scale, (index + 1) * scale


@dataclass(frozen=True, order=True, slots=True)
class BitString:
    """
    A finite binary word naming the cylinder of its extensions in one Cantor-space factor.

    **Notes:**

    -   The empty word denotes the whole space.

    -   Under the identification of Cantor space with `[0, 1)`, the cylinder `[a]` is the half-open
        dyadic interval `[j·2^-n, (j+1)·2^-n)`, where `j` is `a` read in binary and `n = |a|`.

    -   Ordering is lexicographic on the underlying text. For pairwise incomparable words this is
        the left-to-right order of their intervals.
    """

    bits: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.bits, str) or self.bits.strip("01"):
            raise CantorLabException(f"A bit string must only contain '0' and '1', got {self.bits!r}.")

    @classmethod
    def from_index(cls, index: int, depth: int) -> Self:
        """
        Build the word of length `depth` whose binary value is `index`.

        :param index: The position of the cylinder among the `2^depth` cylinders of that depth.
        :param depth: The word length.
        :return: The word.
        """
        if depth < 0 or not 0 <= index < (1 << depth):
            raise CantorLabException(f"Index {index} is out of range for depth {depth}.")
        return cls(format(index, f"0{depth}b") if depth else "")

    @classmethod
    def all_of_length(cls, depth: int) -> list[Self]:
        """
        Return every word of a given length, in lexicographic order.

        :param depth: The word length.
        :return: The `2^depth` words.
        """
        return [cls("".join(bits)) for bits in product("01", repeat=depth)]

    @classmethod
    def up_to_length(cls, depth: int) -> list[Self]:
        """
        Return every word of length at most `depth`, shortest first.

        :param depth: The maximal word length.
        :return: The words, breadth-first and left child first.
        """
        return [word for n in range(depth + 1) for word in cls.all_of_length(n)]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __getitem__(self, i: int) -> int:
        return int(self.bits[i])

    def __iter__(self) -> Iterator[int]:
        return (int(bit) for bit in self.bits)

    def __add__(self, other: "BitString | str") -> "BitString":
        return BitString(self.bits + str(other))

    @property
    def depth(self) -> int:
        """The word length."""
        return len(self.bits)

    @property
    def index(self) -> int:
        """The word read as a binary number (0 for the empty word)."""
        return int(self.bits, 2) if self.bits else 0

    def child(self, bit: int | str) -> "BitString":
        """
        Return the word extended by one bit.

        :param bit: The bit to append.
        :return: The extended word.
        """
        return BitString(self.bits + str(bit))

    def children(self) -> tuple["BitString", "BitString"]:
        """Return the two one-bit extensions, left child first."""
        return BitString(self.bits + "0"), BitString(self.bits + "1")

    def parent(self) -> "BitString":
        """
        Return the word with its last bit removed.

        :return: The parent word.
        :raises CantorLabException: If the word is empty.
        """
        if not self.bits:
            raise CantorLabException("The empty word has no parent.")
        return BitString(self.bits[:-1])

    def prefix(self, n: int) -> "BitString":
        """Return the first `n` bits."""
        return BitString(self.bits[:n])

    def prefixes(self) -> list["BitString"]:
        """Return every prefix from the empty word up to the word itself."""
        return [BitString(self.bits[:n]) for n in range(len(self.bits) + 1)]

    def is_prefix_of(self, other: "BitString") -> bool:
        """
        Check whether this word is a prefix of `other`, i.e. `[other] ⊆ [self]`.

        :param other: The other word.
        :return: `True` if `other` extends this word.
        """
        return other.bits.startswith(self.bits)

    def is_compatible(self, other: "BitString") -> bool:
        """Check whether the two cylinders intersect, i.e. one word extends the other."""
        return self.bits.startswith(other.bits) or other.bits.startswith(self.bits)

    def meet(self, other: "BitString") -> "BitString | None":
        """
        Return the word naming the intersection of the two cylinders.

        :param other: The other word.
        :return: The longer of the two words if they are compatible, otherwise `None`.
        """
        if other.bits.startswith(self.bits):
            return other
        if self.bits.startswith(other.bits):
            return self
        return None

    def interval(self) -> tuple[Fraction, Fraction]:
        """
        Return the half-open dyadic interval `[lo, hi)` of the cylinder.

        :return: The pair `(lo, hi)`.
        """
        return _dyadic_interval(self.bits)

    def uniform_mass(self) -> Fraction:
        """The uniform measure `2^-|a|` of the cylinder."""
        return Fraction(1, 1 << len(self.bits))


EMPTY: BitString = BitString("")
"""The empty word, denoting the whole space."""
