from collections.abc import Callable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Generic, TypeVar

from typing_extensions import Self

from ..exceptions import CantorLabException
from ..utils import attributes_repr, format_rational, formatted_repr
from .bit_string import BitString
from .rect import Rect

CellT = TypeVar("CellT", BitString, Rect)
"""A cell key: a word for functions on one factor, a rectangle for functions on the product."""


def cells_of_depth(depth: int, arity: int) -> list[BitString] | list[Rect]:
    """
    List every depth-`depth` cell of one factor (`arity == 1`) or of the product (`arity == 2`).

    :param depth: The cell depth.
    :param arity: 1 or 2.
    :return: The cells in lexicographic order.
    """
    words = BitString.all_of_length(depth)
    if arity == 1:
        return words
    if arity == 2:
        return [Rect(x, y) for x in words for y in words]
    raise CantorLabException(f"Cylinder functions have arity 1 or 2, got {arity}.")


class CylinderFunction(Generic[CellT]):
    """
    A nonnegative rational function constant on the depth-`d` cells of one factor or of the product.

    **Notes:**

    -   On one factor the cells are the `2^d` words of length `d`; on the product they are the `4^d`
        rectangles whose two words both have length `d`.

    -   Lookups accept any finer cell and read the value of the depth-`d` cell containing it.
    """

    @classmethod
    def constant(cls, value: Fraction | int, depth: int = 0, arity: int = 1) -> "CylinderFunction[Any]":
        """
        Return a constant function.

        :param value: The constant value, `>= 0`.
        :param depth: The representation depth.
        :param arity: 1 for one factor, 2 for the product.
        :return: The function.
        """
        return cls.from_callable(depth, lambda _: Fraction(value), arity)

    @classmethod
    def from_callable(cls, depth: int, fn: Callable[[CellT], Fraction | int], arity: int = 1) -> Self:
        """
        Tabulate a function on every depth-`depth` cell.

        :param depth: The representation depth.
        :param fn: The value of a cell.
        :param arity: 1 for one factor, 2 for the product.
        :return: The function.
        """
        values = {cell: Fraction(fn(cell)) for cell in cells_of_depth(depth, arity)}
        return cls(depth, values, arity)  # type: ignore[arg-type]

    @classmethod
    def indicator(
        cls, cells: Callable[[CellT], bool], depth: int, arity: int = 1, scale: Fraction | int = 1
    ) -> Self:
        """
        Return `scale` times the indicator of a set of depth-`depth` cells.

        :param cells: Membership predicate of a depth-`depth` cell.
        :param depth: The representation depth.
        :param arity: 1 for one factor, 2 for the product.
        :param scale: The value taken on the set.
        :return: The function.
        """
        return cls.from_callable(depth, lambda cell: Fraction(scale) if cells(cell) else Fraction(0), arity)

    # Attributes for the CylinderFunction
    __slots__ = ("__depth", "__arity", "__values")

    def __init__(self, depth: int, values: Mapping[CellT, Fraction | int], arity: int = 1) -> None:
        """
        Initialize an instance of `CylinderFunction`.

        :param depth: The depth `d >= 0` of the cells.
        :param values: A value `>= 0` for every depth-`d` cell.
        :param arity: 1 for a function on one factor, 2 for a function on the product.
        :raises CantorLabException: If a cell is missing or extra, or a value is negative.
        """
        if depth < 0:
            raise CantorLabException("The 'depth' argument must be non-negative.")
        expected = cells_of_depth(depth, arity)
        if len(values) != len(expected) or any(cell not in values for cell in expected):
            raise CantorLabException(f"A depth-{depth} function of arity {arity} needs exactly {len(expected)} cells.")
        table: dict[CellT, Fraction] = {cell: Fraction(values[cell]) for cell in expected}  # type: ignore[index]
        negative = [cell for cell, value in table.items() if value < 0]
        if negative:
            raise CantorLabException(f"Cylinder function values must be >= 0 (cell {negative[0]}).")
        self.__depth: int = depth
        self.__arity: int = arity
        self.__values: dict[CellT, Fraction] = table

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(depth=self.__depth, arity=self.__arity))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CylinderFunction)
            and self.__depth == other.__depth
            and self.__arity == other.__arity
            and self.__values == other.__values
        )

    def __hash__(self) -> int:
        return hash((self.__depth, self.__arity, tuple(self.__values.items())))

    def __iter__(self) -> Iterator[CellT]:
        return iter(self.__values)

    def __len__(self) -> int:
        return len(self.__values)

    def __getitem__(self, cell: CellT) -> Fraction:
        return self.value(cell)

    @property
    def depth(self) -> int:
        """The depth of the cells."""
        return self.__depth

    @property
    def arity(self) -> int:
        """1 for a function on one factor, 2 for a function on the product."""
        return self.__arity

    def items(self) -> Iterator[tuple[CellT, Fraction]]:
        """Iterate `(cell, value)` pairs in lexicographic cell order."""
        return iter(self.__values.items())

    def values(self) -> list[Fraction]:
        """The values in lexicographic cell order."""
        return list(self.__values.values())

    def value(self, cell: CellT) -> Fraction:
        """
        Read the value at a cell of depth at least `d`.

        :param cell: A word (arity 1) or rectangle (arity 2).
        :return: The value of the depth-`d` cell containing it.
        :raises CantorLabException: If the cell is coarser than the representation.
        """
        d = self.__depth
        if isinstance(cell, BitString):
            if self.__arity != 1 or len(cell) < d:
                raise CantorLabException(f"Cell {cell} is not a refinement of a depth-{d} cell.")
            return self.__values[cell.prefix(d)]  # type: ignore[index]
        if self.__arity != 2 or len(cell.a1) < d or len(cell.a2) < d:
            raise CantorLabException(f"Cell {cell} is not a refinement of a depth-{d} cell.")
        return self.__values[Rect(cell.a1.prefix(d), cell.a2.prefix(d))]  # type: ignore[index]

    def refine(self, depth: int) -> "CylinderFunction[CellT]":
        """
        Represent the same function at a finer depth.

        :param depth: The new depth, at least the current one.
        :return: The function with every cell's value copied to its descendants.
        :raises CantorLabException: If `depth` is below the current depth.
        """
        if depth < self.__depth:
            raise CantorLabException(f"Cannot refine a depth-{self.__depth} function to depth {depth}.")
        if depth == self.__depth:
            return self
        return CylinderFunction.from_callable(depth, self.value, self.__arity)

    def scale(self, factor: Fraction | int) -> "CylinderFunction[CellT]":
        """
        Multiply every value by a nonnegative rational.

        :param factor: The factor.
        :return: The scaled function.
        """
        return CylinderFunction(self.__depth, {c: v * factor for c, v in self.__values.items()}, self.__arity)

    def with_value(self, cell: CellT, value: Fraction | int) -> "CylinderFunction[CellT]":
        """Return a copy with one depth-`d` cell set to a new value."""
        if cell not in self.__values:
            raise CantorLabException(f"Cell {cell} is not a depth-{self.__depth} cell.")
        values = dict(self.__values)
        values[cell] = Fraction(value)
        return CylinderFunction(self.__depth, values, self.__arity)

    def fiber(self, x: BitString) -> "CylinderFunction[BitString]":
        """
        Return the one-factor function `y ↦ f(x, y)` of a product function.

        :param x: A first-coordinate word of length at least `d`.
        :return: The fiber, at the same depth.
        """
        if self.__arity != 2:
            raise CantorLabException("Only product functions have fibers.")
        values = {y: self.value(Rect(x, y)) for y in BitString.all_of_length(self.__depth)}
        return CylinderFunction(self.__depth, values)  # type: ignore[arg-type]

    def max_value(self) -> Fraction:
        """The largest value."""
        return max(self.__values.values())

    def to_rows(self) -> list[tuple[str, str]]:
        """Render `(cell, value)` rows with values as `num/den` text."""
        return [(str(cell), format_rational(value)) for cell, value in self.__values.items()]
