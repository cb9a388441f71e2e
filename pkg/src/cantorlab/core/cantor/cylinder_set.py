from bisect import bisect_right
from collections.abc import Callable, Iterable, Iterator
from fractions import Fraction

from typing_extensions import Self

from ..exceptions import CantorLabException
from ..utils import attributes_repr, formatted_repr
from .bit_string import BitString
from .rect import format_cylinder, parse_cylinder

Runs = list[tuple[int, int]]
"""Sorted, disjoint, non-adjacent half-open integer runs `[start, end)` at some grid scale `2^-depth`."""


def _to_runs(words: Iterable[BitString], depth: int) -> Runs:
    spans = sorted((w.index << (depth - len(w)), (w.index + 1) << (depth - len(w))) for w in words)
    runs: Runs = []
    for start, end in spans:
        if runs and start <= runs[-1][1]:
            runs[-1] = (runs[-1][0], max(runs[-1][1], end))
        else:
            runs.append((start, end))
    return runs


def _from_runs(runs: Runs, depth: int) -> list[BitString]:
    # Greedy left-to-right split into maximal aligned dyadic blocks.
    words: list[BitString] = []
    for start, end in runs:
        while start < end:
            k = 0
            while k < depth and start % (1 << (k + 1)) == 0 and start + (1 << (k + 1)) <= end:
                k += 1
            words.append(BitString.from_index(start >> k, depth - k))
            start += 1 << k
    return words


def _rescale(runs: Runs, shift: int) -> Runs:
    return [(start << shift, end << shift) for start, end in runs]


def _combine(a: Runs, b: Runs, op: Callable[[bool, bool], bool], size: int) -> Runs:
    points = sorted({0, size, *(p for run in a for p in run), *(p for run in b for p in run)})
    a_starts, b_starts = [run[0] for run in a], [run[0] for run in b]

    def inside(runs: Runs, starts: list[int], p: int) -> bool:
        i = bisect_right(starts, p) - 1
        return i >= 0 and runs[i][0] <= p < runs[i][1]

    result: Runs = []
    for lo, hi in zip(points, points[1:]):
        if op(inside(a, a_starts, lo), inside(b, b_starts, lo)):
            if result and result[-1][1] == lo:
                result[-1] = (result[-1][0], hi)
            else:
                result.append((lo, hi))
    return result


class CylinderSet:
    """
    A canonical finite union of cylinders in one Cantor-space factor.

    **Notes:**

    -   The stored cylinders are the maximal dyadic intervals contained in the set, listed left to
        right. Two sets are equal exactly when they denote the same points.

    -   Instances are immutable; every operation returns a new set.
    """

    @classmethod
    def empty(cls) -> Self:
        """Return the empty set."""
        return cls()

    @classmethod
    def full(cls) -> Self:
        """Return the whole space."""
        return cls([BitString("")])

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse the text form `[01]+[1]`, with `*` for the whole space and `{}` for the empty set.

        :param text: The text form.
        :return: The parsed set.
        """
        stripped = text.strip()
        if stripped in ("", "{}"):
            return cls()
        return cls(parse_cylinder(token) for token in stripped.split("+"))

    @classmethod
    def _of_runs(cls, runs: Runs, depth: int) -> Self:
        instance = cls.__new__(cls)
        words = _from_runs(runs, depth)
        instance.__cylinders = tuple(words)
        instance.__depth = max((len(w) for w in words), default=0)
        return instance

    # Attributes for the CylinderSet
    __slots__ = ("__cylinders", "__depth")

    def __init__(self, cylinders: Iterable[BitString | str] = ()) -> None:
        """
        Initialize an instance of `CylinderSet`.

        :param cylinders: The cylinders whose union the set denotes, as words or text.
        """
        words = [w if isinstance(w, BitString) else BitString(w) for w in cylinders]
        depth = max((len(w) for w in words), default=0)
        canonical = _from_runs(_to_runs(words, depth), depth)
        self.__cylinders: tuple[BitString, ...] = tuple(canonical)
        self.__depth: int = max((len(w) for w in canonical), default=0)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(cylinders=str(self)))

    def __str__(self) -> str:
        return "+".join(format_cylinder(w) for w in self.__cylinders) if self.__cylinders else "{}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CylinderSet) and self.__cylinders == other.__cylinders

    def __hash__(self) -> int:
        return hash(self.__cylinders)

    def __iter__(self) -> Iterator[BitString]:
        return iter(self.__cylinders)

    def __len__(self) -> int:
        return len(self.__cylinders)

    def __or__(self, other: "CylinderSet") -> "CylinderSet":
        return self.union(other)

    def __and__(self, other: "CylinderSet") -> "CylinderSet":
        return self.intersect(other)

    def __sub__(self, other: "CylinderSet") -> "CylinderSet":
        return self.difference(other)

    @property
    def cylinders(self) -> tuple[BitString, ...]:
        """The canonical cylinders, left to right."""
        return self.__cylinders

    @property
    def depth(self) -> int:
        """The length of the longest canonical cylinder (0 when empty)."""
        return self.__depth

    @property
    def is_empty(self) -> bool:
        """Whether the set is empty."""
        return not self.__cylinders

    @property
    def is_full(self) -> bool:
        """Whether the set is the whole space."""
        return self.__cylinders == (BitString(""),)

    def runs(self, depth: int) -> Runs:
        """
        Return the set as merged integer runs on the grid of spacing `2^-depth`.

        :param depth: The grid depth, at least `self.depth`.
        :return: The runs.
        """
        if depth < self.__depth:
            raise CantorLabException(f"Grid depth {depth} is coarser than the set depth {self.__depth}.")
        return _to_runs(self.__cylinders, depth)

    def _apply(self, other: "CylinderSet", op: Callable[[bool, bool], bool]) -> "CylinderSet":
        depth = max(self.__depth, other.__depth)
        runs = _combine(self.runs(depth), other.runs(depth), op, 1 << depth)
        return CylinderSet._of_runs(runs, depth)

    def union(self, other: "CylinderSet") -> "CylinderSet":
        """Return `self ∪ other`."""
        return self._apply(other, lambda a, b: a or b)

    def intersect(self, other: "CylinderSet") -> "CylinderSet":
        """Return `self ∩ other`."""
        return self._apply(other, lambda a, b: a and b)

    def difference(self, other: "CylinderSet") -> "CylinderSet":
        """Return `self \\ other`."""
        return self._apply(other, lambda a, b: a and not b)

    def complement(self) -> "CylinderSet":
        """Return the complement in the whole space."""
        return CylinderSet.full().difference(self)

    def is_subset(self, other: "CylinderSet") -> bool:
        """Check whether `self ⊆ other`."""
        return self.difference(other).is_empty

    def covers(self, word: BitString) -> bool:
        """Check whether the whole cylinder `[word]` lies in the set."""
        if any(c.is_prefix_of(word) for c in self.__cylinders):
            return True
        return CylinderSet([word]).is_subset(self)

    def meets(self, word: BitString) -> bool:
        """Check whether the cylinder `[word]` intersects the set."""
        return any(c.is_compatible(word) for c in self.__cylinders)

    def contains_point(self, prefix: BitString) -> bool:
        """Check whether every sequence extending `prefix` lies in the set; `prefix` should be at least `depth` long."""
        return any(c.is_prefix_of(prefix) for c in self.__cylinders)

    def restrict(self, prefix: BitString) -> "CylinderSet":
        """Return the part of the set inside `[prefix]`."""
        return self.intersect(CylinderSet([prefix]))

    def at_depth(self, depth: int) -> list[BitString]:
        """
        List the depth-`depth` cylinders making up the set.

        :param depth: The target depth, at least `self.depth`.
        :return: The cylinders, left to right.
        """
        return [BitString.from_index(i, depth) for start, end in self.runs(depth) for i in range(start, end)]

    def measure(self, mass: Callable[[BitString], Fraction]) -> Fraction:
        """
        Sum a cylinder mass function over the canonical cylinders.

        :param mass: The mass of a single cylinder.
        :return: The measure of the set.
        """
        return sum((mass(w) for w in self.__cylinders), Fraction(0))

    def uniform_measure(self) -> Fraction:
        """The uniform (Lebesgue) measure of the set."""
        return self.measure(BitString.uniform_mass)
