from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Self

from ..utils import attributes_repr, formatted_repr
from .bit_string import BitString
from .cylinder_set import CylinderSet
from .rect import Rect

StripeDecomposition = list[tuple[BitString, CylinderSet]]
"""A partition of the first factor into cylinders, each paired with the constant section over it."""


@dataclass(frozen=True, slots=True)
class Section:
    """The vertical section of a basic set over a first-coordinate prefix, with its stability flag."""

    cylinders: CylinderSet
    stable: bool


def _decompose(
    operands: list[list[Rect]], prefix: BitString, combine: Callable[[list[CylinderSet]], CylinderSet]
) -> StripeDecomposition:
    if all(len(r.a1) <= len(prefix) for rects in operands for r in rects):
        return [(prefix, combine([CylinderSet(r.a2 for r in rects) for rects in operands]))]
    left, right = prefix.children()
    lower = _decompose([[r for r in rects if r.a1.is_compatible(left)] for rects in operands], left, combine)
    upper = _decompose([[r for r in rects if r.a1.is_compatible(right)] for rects in operands], right, combine)
    # Siblings with equal sections collapse into their parent stripe.
    if len(lower) == 1 and len(upper) == 1 and lower[0][1] == upper[0][1]:
        return [(prefix, lower[0][1])]
    return lower + upper


def _assemble(stripes: StripeDecomposition) -> tuple[Rect, ...]:
    columns: dict[BitString, list[BitString]] = {}
    for prefix, section in stripes:
        for block in section:
            columns.setdefault(block, []).append(prefix)
    return tuple(sorted(Rect(x, block) for block, xs in columns.items() for x in CylinderSet(xs)))


class BasicSet:
    """
    A canonical finite union of rectangles, i.e. a clopen set in the product of two Cantor spaces.

    **Notes:**

    -   The first factor is partitioned into the coarsest family of cylinders over which the set
        has constant vertical sections. The stored rectangles are `X_J × [J]`, where `J` ranges over
        the canonical cylinders of those sections and `X_J` is the canonical union of the stripes
        whose section contains `J` as a canonical cylinder.

    -   The resulting rectangles are pairwise disjoint, no two siblings can be merged into their
        parent, and the form depends only on the denoted point set. Equality is structural.
    """

    @classmethod
    def empty(cls) -> Self:
        """Return the empty set."""
        return cls()

    @classmethod
    def full(cls) -> Self:
        """Return the full square."""
        return cls([Rect.of()])

    @classmethod
    def stripe(cls, footprint: BitString) -> Self:
        """Return the vertical stripe `[footprint]×Ω₂`."""
        return cls([Rect(footprint, BitString(""))])

    @classmethod
    def product(cls, xs: CylinderSet | BitString, ys: CylinderSet | BitString) -> Self:
        """
        Return the product of two one-factor sets.

        :param xs: The first-coordinate set.
        :param ys: The second-coordinate set.
        :return: `xs × ys`.
        """
        xs_set = xs if isinstance(xs, CylinderSet) else CylinderSet([xs])
        ys_set = ys if isinstance(ys, CylinderSet) else CylinderSet([ys])
        return cls(Rect(x, y) for x in xs_set for y in ys_set)

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse the text form `[a1]x[a2]+...`, with `*` for an empty word and `{}` for the empty set.

        :param text: The text form, e.g. `"[00]x*+[1]x[01]"`.
        :return: The canonical set.
        """
        stripped = text.strip()
        if stripped in ("", "{}"):
            return cls()
        return cls(Rect.parse(term) for term in stripped.split("+"))

    @classmethod
    def _of_stripes(cls, stripes: StripeDecomposition) -> Self:
        instance = cls.__new__(cls)
        rects = _assemble(stripes)
        instance.__rects = rects
        instance.__depth = max((r.depth for r in rects), default=0)
        return instance

    # Attributes for the BasicSet
    __slots__ = ("__rects", "__depth")

    def __init__(self, rects: Iterable[Rect] = ()) -> None:
        """
        Initialize an instance of `BasicSet` in canonical form.

        :param rects: The rectangles whose union the set denotes.
        """
        canonical = _assemble(_decompose([list(rects)], BitString(""), lambda sections: sections[0]))
        self.__rects: tuple[Rect, ...] = canonical
        self.__depth: int = max((r.depth for r in canonical), default=0)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(rects=str(self)))

    def __str__(self) -> str:
        return "+".join(str(r) for r in self.__rects) if self.__rects else "{}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BasicSet) and self.__rects == other.__rects

    def __hash__(self) -> int:
        return hash(self.__rects)

    def __iter__(self) -> Iterator[Rect]:
        return iter(self.__rects)

    def __len__(self) -> int:
        return len(self.__rects)

    def __or__(self, other: "BasicSet") -> "BasicSet":
        return self.union(other)

    def __and__(self, other: "BasicSet") -> "BasicSet":
        return self.intersect(other)

    def __sub__(self, other: "BasicSet") -> "BasicSet":
        return self.difference(other)

    @property
    def rects(self) -> tuple[Rect, ...]:
        """The canonical rectangles, sorted."""
        return self.__rects

    @property
    def depth(self) -> int:
        """The maximal coordinate depth over the canonical rectangles."""
        return self.__depth

    @property
    def is_empty(self) -> bool:
        """Whether the set is empty."""
        return not self.__rects

    def _apply(self, other: "BasicSet", op: Callable[[CylinderSet, CylinderSet], CylinderSet]) -> "BasicSet":
        stripes = _decompose(
            [list(self.__rects), list(other.__rects)], BitString(""), lambda sections: op(sections[0], sections[1])
        )
        return BasicSet._of_stripes(stripes)

    def union(self, other: "BasicSet") -> "BasicSet":
        """Return `self ∪ other`."""
        return self._apply(other, CylinderSet.union)

    def intersect(self, other: "BasicSet") -> "BasicSet":
        """Return `self ∩ other`."""
        return self._apply(other, CylinderSet.intersect)

    def difference(self, other: "BasicSet") -> "BasicSet":
        """Return `self \\ other`."""
        return self._apply(other, CylinderSet.difference)

    def complement(self) -> "BasicSet":
        """Return the complement in the full square."""
        return BasicSet.full().difference(self)

    def is_subset(self, other: "BasicSet") -> bool:
        """Check whether `self ⊆ other`."""
        return self.difference(other).is_empty

    def restrict_to_stripe(self, footprint: BitString) -> "BasicSet":
        """Return the part of the set inside the stripe `[footprint]×Ω₂`."""
        return self.intersect(BasicSet.stripe(footprint))

    def contains_point(self, x: BitString, y: BitString) -> bool:
        """Check whether a point, given by long enough coordinate prefixes, lies in the set."""
        return any(r.contains_point(x, y) for r in self.__rects)

    def x_projection(self) -> CylinderSet:
        """Return the projection of the set onto the first factor."""
        return CylinderSet(r.a1 for r in self.__rects)

    def stripes(self) -> StripeDecomposition:
        """
        Return the coarsest partition of the first factor into stripes with constant sections.

        :return: Pairs `(footprint, section)`, left to right; sections may be empty.
        """
        return _decompose([list(self.__rects)], BitString(""), lambda sections: sections[0])

    def is_stable(self, prefix: BitString) -> bool:
        """Check whether all vertical sections over `[prefix]` coincide."""
        return all(
            r.a1.is_prefix_of(prefix) for r in self.__rects if r.a1.is_compatible(prefix)
        )

    def section(self, prefix: BitString) -> Section:
        """
        Return the vertical section of the set over a first-coordinate prefix.

        :param prefix: The prefix of the conditioning coordinate.
        :return: The common section when the set is stable over `[prefix]`; otherwise the section at
            the leftmost sequence extending `prefix` (`prefix` followed by zeros), flagged unstable.
        """
        compatible = [r for r in self.__rects if r.a1.is_compatible(prefix)]
        stable = all(r.a1.is_prefix_of(prefix) for r in compatible)
        if stable:
            return Section(CylinderSet(r.a2 for r in compatible), True)
        leftmost = [
            r
            for r in compatible
            if r.a1.is_prefix_of(prefix) or r.a1.bits[len(prefix) :].strip("0") == ""
        ]
        return Section(CylinderSet(r.a2 for r in leftmost), False)

    def measure(self, mass: Callable[[Rect], Fraction]) -> Fraction:
        """
        Sum a rectangle mass function over the canonical (disjoint) rectangles.

        :param mass: The mass of a single rectangle.
        :return: The measure of the set.
        """
        return sum((mass(r) for r in self.__rects), Fraction(0))

    def uniform_measure(self) -> Fraction:
        """The uniform measure of the set."""
        return self.measure(Rect.uniform_mass)


def canonicalize(rects: Iterable[Rect]) -> BasicSet:
    """
    Return the canonical basic set denoting the union of the given rectangles.

    :param rects: The rectangles.
    :return: The canonical form, identical for every permutation or refinement of the input.
    """
    return BasicSet(rects)
