from dataclasses import dataclass
from fractions import Fraction
from sys import gettrace
from typing import Any

from ..core.cantor import FULL_SQUARE, BitString, RationalInterval, Rect
from ..core.loggers import Logger
from ..core.utils import attributes_repr, format_rational, formatted_repr
from .oracles import MeasureOracle


@dataclass(frozen=True, slots=True)
class Violation:
    """One failed validity check on one rectangle."""

    rect: Rect
    check: str
    expected: str
    got: str

    def to_json(self) -> dict[str, str]:
        """Return the JSON form `{rect, check, expected, got}`."""
        return {"rect": str(self.rect), "check": self.check, "expected": self.expected, "got": self.got}


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """The outcome of validating an oracle up to a depth."""

    depth: int
    exact: bool
    checked: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        """Whether no check failed."""
        return not self.violations

    def to_json(self) -> list[dict[str, str]]:
        """Return the violations as a JSON list."""
        return [v.to_json() for v in self.violations]


class MeasureValidator:
    """
    Exhaustive validity checker for measure oracles.

    **Notes:**

    -   For every rectangle with both words of length at most `depth` it checks normalization,
        nonnegativity and additivity along both coordinates. For enclosure oracles it also checks
        that widths respect the requested precision and that finer enclosures nest in coarser ones.

    -   Exact oracles are compared with exact equality; enclosure oracles pass additivity when the
        parent enclosure meets the sum of the children's enclosures.

    -   Each rectangle is queried once. Words are numbered breadth-first, so the children of the word
        at position `i` sit at `2i + 1` and `2i + 2` and the additivity checks are table lookups.
    """

    # Attributes for the MeasureValidator
    __slots__ = ("__oracle", "__logger")

    def __init__(self, oracle: MeasureOracle, debug: bool | None = None) -> None:
        """
        Initialize an instance of `MeasureValidator`.

        :param oracle: The oracle to validate.
        :param debug: Whether debug logging is enabled. Defaults to whether a tracer is attached.
        """
        self.__oracle: MeasureOracle = oracle
        self.__logger: Logger = Logger(source=self, debug=debug if debug is not None else gettrace() is not None)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(oracle=self.__oracle))

    def run(self, depth: int) -> ValidationReport:
        """
        Validate the oracle on every rectangle up to `depth`.

        :param depth: The maximal word length on each coordinate.
        :return: The report.
        """
        exact = self.__oracle.is_exact
        words = BitString.up_to_length(depth)
        violations = self._check_exact(words, depth) if exact else self._check_enclosures(words, depth)
        checked = len(words) ** 2
        self.__logger.debug(msg=f"{checked} rectangles, {len(violations)} violations.", action="Validated:")
        return ValidationReport(depth=depth, exact=exact, checked=checked, violations=tuple(violations))

    def _check_exact(self, words: list[BitString], depth: int) -> list[Violation]:
        inner = (1 << depth) - 1
        table = [[self.__oracle.exact_mass(Rect(a1, a2)) for a2 in words] for a1 in words]
        violations: list[Violation] = []
        if table[0][0] != 1:
            violations.append(Violation(FULL_SQUARE, "normalization", "1", format_rational(table[0][0])))
        for i, a1 in enumerate(words):
            row = table[i]
            for j, a2 in enumerate(words):
                value = row[j]
                if value < 0:
                    violations.append(Violation(Rect(a1, a2), "nonnegativity", ">= 0", format_rational(value)))
                if i < inner:
                    total = table[2 * i + 1][j] + table[2 * i + 2][j]
                    if total != value:
                        violations.append(
                            Violation(Rect(a1, a2), "additivity-x", format_rational(value), format_rational(total))
                        )
                if j < inner:
                    total = row[2 * j + 1] + row[2 * j + 2]
                    if total != value:
                        violations.append(
                            Violation(Rect(a1, a2), "additivity-y", format_rational(value), format_rational(total))
                        )
            self.__logger.debug(msg=f"Column {a1 or '*'}: {len(violations)} violations so far.", action="Validate:")
        return violations

    def _check_enclosures(self, words: list[BitString], depth: int) -> list[Violation]:
        inner = (1 << depth) - 1
        fine = Fraction(1, 1 << (depth + 2))
        coarse = tuple(sorted({Fraction(1, 4), Fraction(1, 16), fine}, reverse=True))
        table = [[self.__oracle.mass(Rect(a1, a2), fine) for a2 in words] for a1 in words]
        violations: list[Violation] = []
        if not table[0][0].contains(1):
            violations.append(Violation(FULL_SQUARE, "normalization", "1", str(table[0][0])))
        for i, a1 in enumerate(words):
            row = table[i]
            for j, a2 in enumerate(words):
                rect, value = Rect(a1, a2), row[j]
                if value.hi < 0:
                    violations.append(Violation(rect, "nonnegativity", ">= 0", str(value)))
                splits: list[tuple[str, RationalInterval]] = []
                if i < inner:
                    splits.append(("additivity-x", table[2 * i + 1][j] + table[2 * i + 2][j]))
                if j < inner:
                    splits.append(("additivity-y", row[2 * j + 1] + row[2 * j + 2]))
                for check, total in splits:
                    if not value.intersects(total):
                        violations.append(Violation(rect, check, str(value), str(total)))
                violations.extend(self._enclosure_checks(rect, coarse))
            self.__logger.debug(msg=f"Column {a1 or '*'}: {len(violations)} violations so far.", action="Validate:")
        return violations

    def _enclosure_checks(self, rect: Rect, precisions: tuple[Fraction, ...]) -> list[Violation]:
        violations: list[Violation] = []
        previous: RationalInterval | None = None
        for precision in precisions:
            enclosure = self.__oracle.mass(rect, precision)
            if enclosure.width > precision:
                violations.append(Violation(rect, "width", f"<= {format_rational(precision)}", str(enclosure)))
            if previous is not None and not previous.contains(enclosure):
                violations.append(Violation(rect, "nesting", f"within {previous}", str(enclosure)))
            previous = enclosure
        return violations


def validate(oracle: MeasureOracle, depth: int, debug: bool | None = None) -> ValidationReport:
    """
    Validate a measure oracle on every rectangle up to `depth`.

    :param oracle: The oracle.
    :param depth: The maximal word length on each coordinate.
    :param debug: Whether debug logging is enabled.
    :return: The report; `ok` when no check failed.
    """
    return MeasureValidator(oracle, debug=debug).run(depth)


def report_to_json(report: ValidationReport) -> dict[str, Any]:
    """Return the JSON summary of a validation report."""
    return {
        "depth": report.depth,
        "exact": report.exact,
        "checked": report.checked,
        "ok": report.ok,
        "violations": report.to_json(),
    }
