from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Self

from ..core.cantor import EMPTY, BitString, CylinderFunction, CylinderSet, Rect
from ..core.exceptions import CantorLabException
from ..core.utils import attributes_repr, format_rational, formatted_repr
from ..measures import CantorMeasure, MarginalMeasure, MeasureOracle


class Martingale:
    """
    A martingale on `Ω₁` with respect to a reference measure, tabulated on every cell up to a depth.

    **Notes:**

    -   The defining identity is `P₁(a)·m(a) = P₁(a0)·m(a0) + P₁(a1)·m(a1)`.

    -   Cells of zero reference mass carry no value (`None`); they are excluded from every scan.
    """

    @classmethod
    def from_leaves(cls, leaves: CylinderFunction[BitString], reference: CantorMeasure) -> Self:
        """
        Build the martingale whose depth-`d` values are given, averaging them up the tree.

        :param leaves: The values on the depth-`d` cells.
        :param reference: The reference measure `P₁`.
        :return: The martingale; leaves of zero mass become undefined.
        """
        d = leaves.depth
        weighted: dict[BitString, Fraction] = {}
        masses: dict[BitString, Fraction] = {}
        for word in BitString.all_of_length(d):
            masses[word] = reference.mass(word)
            weighted[word] = masses[word] * leaves.value(word)
        for n in range(d - 1, -1, -1):
            for word in BitString.all_of_length(n):
                left, right = word.children()
                masses[word] = reference.mass(word)
                weighted[word] = weighted[left] + weighted[right]
        values = {w: (weighted[w] / masses[w] if masses[w] > 0 else None) for w in masses}
        return cls(d, values, reference)

    @classmethod
    def from_callable(
        cls, depth: int, fn: Callable[[BitString], Fraction | None], reference: CantorMeasure
    ) -> Self:
        """
        Tabulate a function on every cell up to `depth`, leaving zero-mass cells undefined.

        :param depth: The depth.
        :param fn: The value at a cell.
        :param reference: The reference measure.
        :return: The tabulated function (not checked; see `martingale_check`).
        """
        values: dict[BitString, Fraction | None] = {}
        for word in BitString.up_to_length(depth):
            values[word] = fn(word) if reference.mass(word) > 0 else None
        return cls(depth, values, reference)

    # Attributes for the Martingale
    __slots__ = ("__depth", "__values", "__reference")

    def __init__(
        self, depth: int, values: Mapping[BitString, Fraction | None], reference: CantorMeasure
    ) -> None:
        """
        Initialize an instance of `Martingale`.

        :param depth: The deepest tabulated level.
        :param values: A value (or `None`) for every word of length at most `depth`.
        :param reference: The reference measure `P₁`.
        :raises CantorLabException: If a cell is missing or a value is negative.
        """
        words = BitString.up_to_length(depth)
        if any(w not in values for w in words):
            raise CantorLabException(f"A depth-{depth} martingale needs a value on every cell up to that depth.")
        table = {w: (None if values[w] is None else Fraction(values[w])) for w in words}  # type: ignore[arg-type]
        if any(v is not None and v < 0 for v in table.values()):
            raise CantorLabException("Martingale values must be non-negative.")
        self.__depth: int = depth
        self.__values: dict[BitString, Fraction | None] = table
        self.__reference: CantorMeasure = reference

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(depth=self.__depth, initial=self.initial))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Martingale) and self.__depth == other.__depth and self.__values == other.__values

    def __hash__(self) -> int:
        return hash((self.__depth, tuple(self.__values.items())))

    @property
    def depth(self) -> int:
        """The deepest tabulated level."""
        return self.__depth

    @property
    def reference(self) -> CantorMeasure:
        """The reference measure."""
        return self.__reference

    @property
    def initial(self) -> Fraction | None:
        """The value `m(ε)`."""
        return self.__values[EMPTY]

    def value(self, word: BitString) -> Fraction | None:
        """Return `m(word)`, or `None` on a zero-mass cell."""
        return self.__values[word]

    def undefined(self) -> list[BitString]:
        """The cells flagged as having zero reference mass."""
        return [w for w, v in self.__values.items() if v is None]

    def leaves(self) -> CylinderFunction[BitString]:
        """The depth-`d` values as a cylinder function, with undefined cells read as 0."""
        return CylinderFunction.from_callable(self.__depth, lambda w: self.__values[w] or Fraction(0))

    def with_value(self, word: BitString, value: Fraction | None) -> "Martingale":
        """Return a copy with one cell replaced."""
        values = dict(self.__values)
        values[word] = value
        return Martingale(self.__depth, values, self.__reference)

    def to_rows(self) -> list[tuple[str, str]]:
        """Render `(cell, value)` rows, cells breadth-first, `*` for the root and `undefined` for no value."""
        return [
            (w.bits or "*", "undefined" if v is None else format_rational(v)) for w, v in self.__values.items()
        ]


def conditional_martingale(oracle: MeasureOracle, a2: BitString | CylinderSet, depth: int) -> Martingale:
    """
    Return the martingale `m(a1) = P(a1, a2) / P₁(a1)` on every cell up to `depth`.

    :param oracle: An exact measure.
    :param a2: The target cylinder (or finite union of cylinders) on `Ω₂`.
    :param depth: The deepest level.
    :return: The martingale with respect to the marginal `P₁`; zero-marginal cells are undefined.
    """
    target = a2 if isinstance(a2, CylinderSet) else CylinderSet([a2])
    reference = MarginalMeasure(oracle)

    def ratio(word: BitString) -> Fraction:
        return target.measure(lambda w: oracle.exact_mass(Rect(word, w))) / reference.mass(word)

    return Martingale.from_callable(depth, ratio, reference)


@dataclass(frozen=True, slots=True)
class MartingaleViolation:
    """A cell where the weighted martingale identity fails."""

    cell: BitString
    expected: Fraction
    got: Fraction


@dataclass(frozen=True, slots=True)
class MartingaleReport:
    """The outcome of `martingale_check`."""

    checked: int
    violations: tuple[MartingaleViolation, ...]

    @property
    def ok(self) -> bool:
        """Whether the identity holds on every internal cell."""
        return not self.violations


def martingale_check(m: Martingale, reference: CantorMeasure | None = None) -> MartingaleReport:
    """
    Verify `P₁(a)·m(a) = P₁(a0)·m(a0) + P₁(a1)·m(a1)` exactly on every internal cell.

    :param m: The tabulated martingale.
    :param reference: The measure to check against; defaults to the martingale's own reference.
    :return: The report; undefined child values count as 0 and undefined parents are skipped.
    """
    p1 = reference or m.reference
    violations: list[MartingaleViolation] = []
    checked = 0
    for word in BitString.up_to_length(m.depth - 1):
        value = m.value(word)
        if value is None:
            continue
        checked += 1
        expected = p1.mass(word) * value
        got = sum((p1.mass(c) * (m.value(c) or Fraction(0)) for c in word.children()), Fraction(0))
        if expected != got:
            violations.append(MartingaleViolation(word, expected, got))
    return MartingaleReport(checked=checked, violations=tuple(violations))


@dataclass(frozen=True, slots=True)
class ExceedResult:
    """The set where a martingale first reaches a level, with its measure and the maximal-inequality bound."""

    level: Fraction
    cells: CylinderSet
    measure: Fraction
    bound: Fraction

    @property
    def ok(self) -> bool:
        """Whether `P₁(cells) <= m(ε)/c`."""
        return self.measure <= self.bound


def exceed_set(m: Martingale, c: Fraction) -> ExceedResult:
    """
    Collect the maximal cells where `m` first reaches `c`.

    :param m: The martingale.
    :param c: The level, `> 0`.
    :return: The union of first-hit cells, its exact reference measure and the bound `m(ε)/c`.
    """
    if c <= 0:
        raise CantorLabException("The exceed level must be positive.")
    hits: list[BitString] = []
    frontier = [EMPTY]
    while frontier:
        following: list[BitString] = []
        for word in frontier:
            value = m.value(word)
            if value is None:
                continue
            if value >= c:
                hits.append(word)
            elif len(word) < m.depth:
                following.extend(word.children())
        frontier = following
    cells = CylinderSet(hits)
    initial = m.initial or Fraction(0)
    return ExceedResult(level=Fraction(c), cells=cells, measure=m.reference.measure(cells), bound=initial / c)
