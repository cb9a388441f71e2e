from collections.abc import Callable
from fractions import Fraction
from typing import Any

from typing_extensions import Self, final, override

from ...core.cantor import BitString, Rect
from ...core.exceptions import CantorLabException
from .measure_oracle import ExactMeasureOracle


@final
class GridOracle(ExactMeasureOracle):
    """
    A brute-force oracle built from the masses of the cells of a `2^-g × 2^-g` grid.

    **Notes:**

    -   Rectangle masses are read from a two-dimensional prefix-sum table, so any rectangle no
        finer than the grid is answered by four lookups.

    -   Used to cross-check the closed-form oracles by direct integration.
    """

    @classmethod
    def from_density(cls, depth: int, density: Callable[[Fraction, Fraction], Fraction]) -> Self:
        """
        Build the grid from a density that is constant on every grid cell.

        :param depth: The grid depth `g`.
        :param density: The density at a point; evaluated at each cell's lower-left corner.
        :return: The oracle.
        """
        scale = Fraction(1, 1 << depth)
        return cls(depth, lambda i, j: density(i * scale, j * scale) * scale * scale)

    __slots__ = ("__depth", "__sums")

    def __init__(self, depth: int, cell_mass: Callable[[int, int], Fraction]) -> None:
        """
        Initialize an instance of `GridOracle`.

        :param depth: The grid depth `g`.
        :param cell_mass: The mass of the cell with integer coordinates `(i, j)`, `0 <= i, j < 2^g`.
        """
        size = 1 << depth
        sums = [[Fraction(0)] * (size + 1) for _ in range(size + 1)]
        for i in range(size):
            row, above = sums[i + 1], sums[i]
            running = Fraction(0)
            for j in range(size):
                running += cell_mass(i, j)
                row[j + 1] = above[j + 1] + running
        self.__depth: int = depth
        self.__sums: list[list[Fraction]] = sums

    def _span(self, word: BitString) -> tuple[int, int]:
        shift = self.__depth - len(word)
        return word.index << shift, (word.index + 1) << shift

    @override
    def _exact_mass(self, rect: Rect) -> Fraction:
        if rect.depth > self.__depth:
            raise CantorLabException(f"Rectangle {rect} is finer than the depth-{self.__depth} grid.")
        i0, i1 = self._span(rect.a1)
        j0, j1 = self._span(rect.a2)
        s = self.__sums
        return s[i1][j1] - s[i0][j1] - s[i1][j0] + s[i0][j0]

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "grid", "depth": self.__depth}
