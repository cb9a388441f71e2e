from collections.abc import Iterator
from dataclasses import dataclass
from typing import Any

from ..core.cantor import BitString, Rect
from ..core.utils import floor_log2
from .expectation import ExpectationTest

NEG_INF: str = "-inf"


@dataclass(frozen=True, slots=True)
class DeficiencyField:
    """
    The integer deficiency `⌊log₂ t⌋` of a test on each of its cells.

    **Notes:**

    -   Cells where the test vanishes carry `None`, standing for minus infinity.
    """

    depth: int
    levels: dict[Any, int | None]

    def value(self, cell: BitString | Rect) -> int | None:
        """Return the deficiency on the depth-`depth` cell containing `cell`."""
        if isinstance(cell, BitString):
            return self.levels[cell.prefix(self.depth)]
        return self.levels[Rect(cell.a1.prefix(self.depth), cell.a2.prefix(self.depth))]

    def items(self) -> Iterator[tuple[Any, int | None]]:
        """Iterate `(cell, deficiency)` pairs."""
        return iter(self.levels.items())

    def to_rows(self) -> list[tuple[str, str]]:
        """Render `(cell, deficiency)` rows, `-inf` for vanishing cells."""
        return [(str(cell), NEG_INF if level is None else str(level)) for cell, level in self.levels.items()]


def deficiency(t: ExpectationTest) -> DeficiencyField:
    """
    Return the rounded-down base-2 logarithm of a test, cell by cell.

    :param t: The test.
    :return: The field; negative levels are kept.
    """
    return DeficiencyField(
        t.f.depth, {cell: floor_log2(value) if value > 0 else None for cell, value in t.f.items()}
    )
