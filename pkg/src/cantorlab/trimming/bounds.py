from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from ..conditional import PathGenerator
from ..core.cantor import BasicSet, BitString, RationalInterval
from ..core.exceptions import ZeroMarginalException
from ..core.utils import format_rational
from ..measures import MeasureOracle
from .gamma_oracle import GammaOracle
from .stripe import Stripe, vertical_size
from .trim_config import TrimConfig
from .trimmer import TrimResult, is_good


@dataclass(frozen=True, slots=True)
class LedgerEntry:
    """One exact bound of a trim: a measure compared with its bound."""

    stage: int
    name: str
    measure: Fraction
    bound: Fraction

    @property
    def ok(self) -> bool:
        """Whether `measure <= bound`."""
        return self.measure <= self.bound

    def to_row(self) -> list[str]:
        """Return the `stage,set,measure,bound,ok` row."""
        return [str(self.stage), self.name, format_rational(self.measure), format_rational(self.bound), str(self.ok)]


@dataclass(frozen=True, slots=True)
class BoundReport:
    """The ledger of a trim and any failed structural inclusion."""

    entries: tuple[LedgerEntry, ...]
    structure: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        """Whether every bound and inclusion holds."""
        return not self.structure and all(e.ok for e in self.entries)

    @property
    def violations(self) -> list[str]:
        """Describe every failure."""
        failed = [
            f"stage {e.stage} {e.name}: {format_rational(e.measure)} > {format_rational(e.bound)}"
            for e in self.entries
            if not e.ok
        ]
        return failed + list(self.structure)

    def to_csv_rows(self) -> list[list[str]]:
        """Return the ledger rows, header first."""
        return [["stage", "set", "measure", "bound", "ok"]] + [e.to_row() for e in self.entries]


def verify_bounds(result: TrimResult, oracle: MeasureOracle, cfg: TrimConfig) -> BoundReport:
    """
    Check the measure bounds and inclusions of a trim, exactly.

    Per stage `i` it checks `P(U_i∩G_i) <= ε·P(G_i)`, and for `i >= 2`
    `P(U_{i−1}∩(G_{i−1}∖G_i)) <= ε·P(G_{i−1}∖G_i) + 2δ_{i−1}·P(G_i)` together with
    `P(Û_i∩S) <= (ε+2δ_{i−1})·h(S)` for every stage-`(i−1)` stripe `S`. Each trimmed set must satisfy
    `P(Û_k) <= ε + 2Σ_{i<k}δ_i <= 3ε`, be contained in `U_k` and in `Û_{k+1}`; the `G_i` must decrease.

    :param result: The trim.
    :param oracle: The exact measure.
    :param cfg: The trim configuration.
    :return: The report.
    """
    eps = cfg.epsilon

    def mass(u: BasicSet) -> Fraction:
        return u.measure(oracle.exact_mass)

    entries: list[LedgerEntry] = []
    structure: list[str] = []
    for i in range(1, result.stages + 1):
        u_i, g_i = result.covers.stage(i), result.good_set(i)
        entries.append(LedgerEntry(i, f"U{i}∩G{i}", mass(u_i & g_i), eps * mass(g_i)))
        if i >= 2:
            u_prev, g_prev, delta = result.covers.stage(i - 1), result.good_set(i - 1), cfg.delta(i - 1)
            ring = g_prev - g_i
            ring_bound = eps * mass(ring) + 2 * delta * mass(g_i)
            entries.append(LedgerEntry(i, f"U{i - 1}∩(G{i - 1}∖G{i})", mass(u_prev & ring), ring_bound))
            local = (u_prev & ring) | (u_i & g_i)
            for stripe in result.stripes[i - 2]:
                piece = local & stripe.as_set()
                stripe_bound = (eps + 2 * delta) * stripe.height(oracle)
                entries.append(LedgerEntry(i, f"Û{i}∩{stripe}", mass(piece), stripe_bound))
            if not g_i.is_subset(g_prev):
                structure.append(f"G{i} is not contained in G{i - 1}")
        bound = eps + 2 * sum(cfg.deltas[: i - 1], Fraction(0))
        entries.append(LedgerEntry(i, f"Û{i}", mass(result.trimmed(i)), min(bound, 3 * eps)))
        if not result.trimmed(i).is_subset(u_i):
            structure.append(f"Û{i} is not contained in U{i}")
        if i < result.stages and not result.trimmed(i).is_subset(result.trimmed(i + 1)):
            structure.append(f"Û{i} is not contained in Û{i + 1}")
    return BoundReport(tuple(entries), tuple(structure))


CoverageStatus = Literal["covered", "not-covered", "precondition"]


@dataclass(frozen=True, slots=True)
class CoverageReport:
    """
    Whether a point of `U_k` survived trimming, with the stage its first coordinate reached.

    **Notes:**

    -   `level` is the shallowest stripe along the point that is good for every stage up to `k`,
        i.e. the depth at which the Γ-bounds have converged onto the vertical sizes.

    -   `not-covered` is only reported once that stripe exists within the search depth, so the point
        had to be kept; every other miss is a `precondition` status.
    """

    status: CoverageStatus
    reached: int
    gamma: RationalInterval | None = None
    size: RationalInterval | None = None
    reason: str = ""
    level: int | None = None

    @property
    def covered(self) -> bool:
        """Whether the point lies in `Û_k`."""
        return self.status == "covered"

    @property
    def violated(self) -> bool:
        """Whether the point was trimmed although every hypothesis held."""
        return self.status == "not-covered"

    def to_json(self) -> dict[str, Any]:
        """Return `{status, reached, level, gamma, size, reason}`."""
        return {
            "status": self.status,
            "reached": self.reached,
            "level": self.level,
            "gamma": None if self.gamma is None else str(self.gamma),
            "size": None if self.size is None else str(self.size),
            "reason": self.reason,
        }


def convergence_level(
    result: TrimResult, gamma: GammaOracle, oracle: MeasureOracle, x: BitString, k: int, cfg: TrimConfig
) -> int | None:
    """
    Return the shallowest stripe level along `x` at which the stripe is good for every stage up to `k`.

    :param result: The trim.
    :param gamma: The Γ-oracle the trim used.
    :param oracle: The measure.
    :param x: The first coordinate, read to the deepest level considered.
    :param k: The stage, counting from 1.
    :param cfg: The trim configuration; levels beyond its search depth are not considered.
    :return: The level, or `None` if no such stripe exists.
    """
    for level in range(min(len(x), cfg.maxdepth) + 1):
        stripe = Stripe(x.prefix(level))
        if all(
            is_good(oracle, gamma, result.covers.stage(i), stripe, cfg.delta(i), cfg.epsilon).good
            for i in range(1, k + 1)
        ):
            return level
    return None


def coverage_check(
    result: TrimResult,
    gamma: GammaOracle,
    oracle: MeasureOracle,
    point: tuple[PathGenerator, PathGenerator],
    k: int,
    cfg: TrimConfig,
    depth: int | None = None,
) -> CoverageReport:
    """
    Check that a point of `U_k` with a small section is kept in `Û_k`.

    A stripe along the point that is good for every stage up to `k` is found by each stage's
    search, so the point then lies in `U_k ∩ G_k ⊆ Û_k`. Such a stripe certifies the hypotheses,
    and a point missing from `Û_k` in its presence is a `not-covered` failure.

    :param result: The trim.
    :param gamma: The Γ-oracle the trim used; its bounds at the point are reported.
    :param oracle: The measure.
    :param point: The two coordinates.
    :param k: The stage, counting from 1.
    :param cfg: The trim configuration.
    :param depth: The prefix length the point is read to. Defaults to the search depth.
    :return: The report; unmet hypotheses and an exhausted depth are `precondition` statuses.
    """
    depth = cfg.maxdepth if depth is None else depth
    x, y = point[0].prefix(depth), point[1].prefix(depth)
    u_k = result.covers.stage(k)
    reached = max((i for i in range(1, result.stages + 1) if result.good_set(i).contains_point(x, y)), default=0)

    def unmet(reason: str, **info: Any) -> CoverageReport:
        return CoverageReport("precondition", reached, reason=reason, **info)

    if not u_k.contains_point(x, y):
        return unmet("point not in the cover")
    section = u_k.section(x)
    if not section.stable:
        return unmet("cover not stable at this depth")
    try:
        size = vertical_size(oracle, u_k, Stripe(x), Fraction(1, 1 << depth))
    except ZeroMarginalException:
        return unmet("zero-marginal prefix")
    bounds = gamma.bounds(x, section.cylinders)
    if size.lo >= cfg.epsilon:
        return unmet("section not below epsilon", gamma=bounds, size=size)
    level = convergence_level(result, gamma, oracle, x, k, cfg)
    if result.trimmed(k).contains_point(x, y):
        return CoverageReport("covered", reached, bounds, size, level=level)
    if level is None:
        return unmet("depth exhausted before good stripe found", gamma=bounds, size=size)
    reason = f"stripe {Stripe(x.prefix(level))} is good for every stage up to {k} but the point was trimmed"
    return CoverageReport("not-covered", reached, bounds, size, reason, level)
