from dataclasses import dataclass
from fractions import Fraction
from sys import gettrace
from typing import Literal

from typing_extensions import Self

from ..core.cantor import BitString, CylinderSet, RationalInterval
from ..core.exceptions import ConfigException, ZeroMarginalException
from ..core.loggers import Logger
from ..core.utils import attributes_repr, format_rational, formatted_repr, parse_rational
from ..measures import MeasureOracle, cond_interval
from .path_generator import PathGenerator

VerdictKind = Literal["converged", "oscillating", "undecided"]

DEFAULT_WINDOW: int = 6
"""Number of trailing depths a verdict looks at."""

DEFAULT_TOLERANCE: Fraction = Fraction(1, 1024)
"""Maximal band width for a verdict."""

DEFAULT_PRECISION: Fraction = Fraction(1, 1 << 20)
"""Enclosure width requested from non-exact oracles."""

MIN_BAND_HITS: int = 3


@dataclass(frozen=True, slots=True)
class Verdict:
    """The classification of a trace: a limit enclosure, two accumulation bands, or nothing."""

    kind: VerdictKind
    bands: tuple[RationalInterval, ...] = ()

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse `converged:lo:hi`, `oscillating:lo1:hi1:lo2:hi2` or `undecided`.

        :param text: The encoded verdict.
        :return: The verdict.
        """
        kind, *numbers = text.strip().split(":")
        if kind not in ("converged", "oscillating", "undecided") or len(numbers) != {
            "converged": 2,
            "oscillating": 4,
            "undecided": 0,
        }[kind]:
            raise ConfigException(f"Malformed verdict {text!r}.")
        values = [parse_rational(n) for n in numbers]
        bands = tuple(RationalInterval(values[i], values[i + 1]) for i in range(0, len(values), 2))
        return cls(kind, bands)  # type: ignore[arg-type]

    def __str__(self) -> str:
        parts = [self.kind] + [format_rational(q) for band in self.bands for q in (band.lo, band.hi)]
        return ":".join(parts)

    @property
    def limit(self) -> RationalInterval | None:
        """The limit enclosure of a converged trace."""
        return self.bands[0] if self.kind == "converged" else None


def classify(values: list[RationalInterval], window: int, tolerance: Fraction) -> Verdict:
    """
    Classify the trailing `window` enclosures of a trace.

    A trace has converged when the hull of the window has width at most `tolerance`. It oscillates
    when the window, ordered by midpoint, splits into a lower and an upper group of at least three
    enclosures each, both with hulls of width at most `tolerance` and the hulls disjoint.

    :param values: The enclosures, shallowest first.
    :param window: The number of trailing enclosures inspected.
    :param tolerance: The maximal band width.
    :return: The verdict; `undecided` when fewer than `window` values exist.
    """
    if window < 1 or len(values) < window:
        return Verdict("undecided")
    tail = values[-window:]
    hull = RationalInterval.hull(tail)
    if hull.width <= tolerance:
        return Verdict("converged", (hull,))
    ordered = sorted(tail, key=lambda i: i.mid)
    for split in range(MIN_BAND_HITS, len(ordered) - MIN_BAND_HITS + 1):
        low, high = RationalInterval.hull(ordered[:split]), RationalInterval.hull(ordered[split:])
        if low.width <= tolerance and high.width <= tolerance and low.hi < high.lo:
            return Verdict("oscillating", (low, high))
    return Verdict("undecided")


@dataclass(frozen=True, slots=True)
class ConvergenceTrace:
    """Interval-conditioned probabilities along a path, with the running and final verdicts."""

    path: str
    target: str
    values: tuple[tuple[int, RationalInterval], ...]
    running: tuple[Verdict, ...]
    verdict: Verdict

    def to_csv_rows(self) -> list[list[str]]:
        """Return the `depth,lo,hi,verdict-so-far` rows, header first."""
        rows = [["depth", "lo", "hi", "verdict"]]
        for (depth, enclosure), verdict in zip(self.values, self.running):
            rows.append([str(depth), format_rational(enclosure.lo), format_rational(enclosure.hi), str(verdict)])
        return rows


class ConditionalTracer:
    """
    Computes conditional traces of one measure along paths.

    **Notes:**

    -   Each depth's value is `cond_interval(P, path[:d], a2)`; a zero-marginal prefix aborts the
        trace with the depth reached.
    """

    # Attributes for the ConditionalTracer
    __slots__ = ("__oracle", "__precision", "__logger")

    def __init__(
        self, oracle: MeasureOracle, precision: Fraction = DEFAULT_PRECISION, debug: bool | None = None
    ) -> None:
        """
        Initialize an instance of `ConditionalTracer`.

        :param oracle: The measure.
        :param precision: The enclosure width requested from non-exact oracles.
        :param debug: Whether debug logging is enabled. Defaults to whether a tracer is attached.
        """
        self.__oracle: MeasureOracle = oracle
        self.__precision: Fraction = precision
        self.__logger: Logger = Logger(source=self, debug=debug if debug is not None else gettrace() is not None)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(oracle=self.__oracle, precision=self.__precision))

    def trace(
        self,
        path: PathGenerator,
        a2: BitString | CylinderSet,
        maxdepth: int,
        window: int = DEFAULT_WINDOW,
        tolerance: Fraction = DEFAULT_TOLERANCE,
    ) -> ConvergenceTrace:
        """
        Trace the conditional of `a2` along the prefixes of `path` up to `maxdepth`.

        :param path: The conditioning sequence.
        :param a2: The target on `Ω₂`.
        :param maxdepth: The deepest prefix length.
        :param window: The verdict window.
        :param tolerance: The verdict band width.
        :return: The trace.
        :raises ZeroMarginalException: With the depth reached, when a prefix has zero marginal.
        """
        values: list[tuple[int, RationalInterval]] = []
        running: list[Verdict] = []
        for depth in range(maxdepth + 1):
            prefix = path.prefix(depth)
            try:
                enclosure = cond_interval(self.__oracle, prefix, a2, self.__precision)
            except ZeroMarginalException as e:
                raise ZeroMarginalException(prefix=prefix.bits, depth=depth) from e
            values.append((depth, enclosure))
            running.append(classify([v for _, v in values], window, tolerance))
            self.__logger.debug(msg=f"depth {depth}: {enclosure} ({running[-1]})", action="Trace:")
        target = a2.bits if isinstance(a2, BitString) else str(a2)
        verdict = running[-1] if running else Verdict("undecided")
        return ConvergenceTrace(path.label, target, tuple(values), tuple(running), verdict)


def conditional_trace(
    oracle: MeasureOracle,
    path: PathGenerator,
    a2: BitString | CylinderSet,
    maxdepth: int,
    window: int = DEFAULT_WINDOW,
    tolerance: Fraction = DEFAULT_TOLERANCE,
) -> ConvergenceTrace:
    """
    Trace `P_{path[:d]}(a2)` for `d = 0…maxdepth` and classify the result.

    :param oracle: The measure.
    :param path: The conditioning sequence.
    :param a2: The target on `Ω₂`.
    :param maxdepth: The deepest prefix length.
    :param window: The verdict window.
    :param tolerance: The verdict band width.
    :return: The trace.
    """
    return ConditionalTracer(oracle).trace(path, a2, maxdepth, window, tolerance)


@dataclass(frozen=True, slots=True)
class AdditivityEntry:
    """The additivity check of one parent target against its two children."""

    a2: BitString
    parent: Verdict
    children: tuple[Verdict, Verdict]
    status: Literal["ok", "violated", "undecided"]


@dataclass(frozen=True, slots=True)
class AdditivityReport:
    """The outcome of `additivity_of_limits`."""

    entries: tuple[AdditivityEntry, ...]

    @property
    def ok(self) -> bool:
        """Whether every entry is additive within its enclosures."""
        return all(e.status == "ok" for e in self.entries)

    @property
    def undecided(self) -> bool:
        """Whether some trace did not converge."""
        return any(e.status == "undecided" for e in self.entries)


def additivity_of_limits(
    oracle: MeasureOracle,
    path: PathGenerator,
    cells: list[BitString],
    maxdepth: int,
    window: int = DEFAULT_WINDOW,
    tolerance: Fraction = DEFAULT_TOLERANCE,
) -> AdditivityReport:
    """
    Check that limit enclosures of sibling targets add up to the limit enclosure of their parent.

    :param oracle: The measure.
    :param path: The conditioning sequence.
    :param cells: The parent targets `a2`; each is compared with `a2·0` and `a2·1`.
    :param maxdepth: The deepest prefix length.
    :param window: The verdict window.
    :param tolerance: The verdict band width.
    :return: The report; entries whose traces did not converge are `undecided`.
    """
    tracer = ConditionalTracer(oracle)
    entries: list[AdditivityEntry] = []
    for a2 in cells:
        parent = tracer.trace(path, a2, maxdepth, window, tolerance).verdict
        left, right = (tracer.trace(path, c, maxdepth, window, tolerance).verdict for c in a2.children())
        if parent.limit is None or left.limit is None or right.limit is None:
            status: Literal["ok", "violated", "undecided"] = "undecided"
        else:
            status = "ok" if parent.limit.intersects(left.limit + right.limit) else "violated"
        entries.append(AdditivityEntry(a2, parent, (left, right), status))
    return AdditivityReport(tuple(entries))
