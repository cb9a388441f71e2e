from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..core.cantor import EMPTY, BitString, CylinderFunction, Rect
from ..core.exceptions import CantorLabException
from ..core.utils import format_rational
from ..measures import CantorMeasure, MeasureOracle

Measure = CantorMeasure | MeasureOracle
"""A one-factor measure or an exact measure on the product."""


def integral(f: CylinderFunction[Any], measure: Measure) -> Fraction:
    """
    Integrate a cylinder function exactly: `Σ value(cell)·mass(cell)`.

    A one-factor function integrated against a product measure uses its first marginal.

    :param f: The function.
    :param measure: The measure.
    :return: The integral.
    """
    if f.arity == 1:
        if isinstance(measure, CantorMeasure):
            return sum((v * measure.mass(cell) for cell, v in f.items()), Fraction(0))
        return sum((v * measure.exact_mass(Rect(cell, EMPTY)) for cell, v in f.items()), Fraction(0))
    if isinstance(measure, CantorMeasure):
        raise CantorLabException("A product function needs a product measure.")
    return sum((v * measure.exact_mass(cell) for cell, v in f.items()), Fraction(0))


@dataclass(frozen=True, slots=True)
class ExpectationTest:
    """
    A nonnegative cylinder function with integral at most 1 under its measure.

    **Notes:**

    -   `scaled_by` is the factor applied by `make_test`; it is 1 when no trimming was needed.
    """

    f: CylinderFunction[Any]
    measure: Measure
    scaled_by: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if integral(self.f, self.measure) > 1:
            raise CantorLabException("An expectation test must integrate to at most 1.")

    @property
    def trimmed(self) -> bool:
        """Whether the function was scaled down to become a test."""
        return self.scaled_by != 1

    @property
    def integral(self) -> Fraction:
        """The exact integral."""
        return integral(self.f, self.measure)

    def value(self, cell: BitString | Rect) -> Fraction:
        """Read the test at a cell of at least its depth."""
        return self.f.value(cell)

    def to_csv_rows(self) -> list[list[str]]:
        """Return the `cell,value` rows, header first."""
        return [["cell", "value"]] + [[cell, value] for cell, value in self.f.to_rows()]

    def to_json(self) -> dict[str, Any]:
        """Return the bound ledger entry of the test."""
        value = self.integral
        return {"construction": "test", "integral": format_rational(value), "bound": "1", "ok": value <= 1}


def make_test(f: CylinderFunction[Any], measure: Measure) -> ExpectationTest:
    """
    Turn a nonnegative function into a test, scaling it down only when its integral exceeds 1.

    :param f: The function.
    :param measure: The measure.
    :return: The test.
    """
    total = integral(f, measure)
    if total <= 1:
        return ExpectationTest(f, measure)
    return ExpectationTest(f.scale(1 / total), measure, 1 / total)
