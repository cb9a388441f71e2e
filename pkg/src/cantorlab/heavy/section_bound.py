from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from ..conditional import PathGenerator
from ..core.cantor import BasicSet, BitString, CylinderSet, RationalInterval
from ..core.exceptions import PreconditionException, ZeroMarginalException
from ..core.utils import format_rational
from ..measures import MeasureOracle, cond_interval
from .heavy_scan import enumerate_heavy

SectionStatus = Literal["ok", "violated", "precondition"]


@dataclass(frozen=True, slots=True)
class SectionBoundReport:
    """The conditional measure of one section compared with `2⁻ⁿ` plus slack."""

    prefix: BitString
    section: CylinderSet
    value: RationalInterval | None
    bound: Fraction
    status: SectionStatus
    reason: str = ""

    @property
    def ok(self) -> bool:
        """Whether the bound holds."""
        return self.status == "ok"

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form of the report."""
        return {
            "prefix": self.prefix.bits,
            "section": str(self.section),
            "value": None if self.value is None else str(self.value),
            "bound": format_rational(self.bound),
            "status": self.status,
            "reason": self.reason,
        }


def section_bound_check(
    oracle: MeasureOracle,
    u: BasicSet,
    n: int,
    path: PathGenerator,
    depth: int,
    slack: Fraction = Fraction(0),
) -> SectionBoundReport:
    """
    Check that the conditional measure of the section of `U` along `path` is at most `2⁻ⁿ + slack`.

    :param oracle: The exact measure.
    :param u: The tested set.
    :param n: The heaviness level.
    :param path: The conditioning sequence.
    :param depth: The prefix length at which the section is taken.
    :param slack: Extra room granted to the finite-depth value.
    :return: The report; a measure without exact masses, a path inside a heavy interval, an unstable
        section or a zero-marginal prefix is a `precondition` status, never a violation.
    """
    prefix = path.prefix(depth)
    bound = Fraction(1, 1 << n) + slack
    section = u.section(prefix)

    def unmet(reason: str) -> SectionBoundReport:
        return SectionBoundReport(prefix, section.cylinders, None, bound, "precondition", reason)

    try:
        scan = enumerate_heavy(oracle, u, n, depth)
    except PreconditionException as e:
        return unmet(e.reason)
    if scan.covers(prefix):
        return unmet("path inside heavy interval")
    if not section.stable:
        return unmet("section not stable at this depth")
    try:
        value = cond_interval(oracle, prefix, section.cylinders)
    except ZeroMarginalException:
        return unmet("zero-marginal prefix")
    status: SectionStatus = "ok" if value.lo <= bound else "violated"
    return SectionBoundReport(prefix, section.cylinders, value, bound, status)
