from dataclasses import dataclass
from fractions import Fraction

from ..core.cantor import EMPTY, BitString, CylinderSet
from ..core.exceptions import CantorLabException
from .martingale import Martingale


@dataclass(frozen=True, slots=True)
class UpcrossingScan:
    """
    Completed upcrossings of `[u, v]` on every cell, and the capital of the follower strategy.

    **Notes:**

    -   `crossings[a]` counts the passages from below `u` to above `v` completed along the path to
        `a`, including the state change at `a` itself.
    """

    u: Fraction
    v: Fraction
    capital: Martingale
    crossings: dict[BitString, int]
    completions: tuple[BitString, ...]

    def cells_with(self, n: int) -> CylinderSet:
        """The depth-`d` cells with at least `n` completed upcrossings."""
        depth = self.capital.depth
        return CylinderSet(w for w, count in self.crossings.items() if len(w) == depth and count >= n)

    def measure_with(self, n: int) -> Fraction:
        """The reference measure of the depth-`d` cells with at least `n` completed upcrossings."""
        return self.capital.reference.measure(self.cells_with(n))

    def bound(self, n: int) -> Fraction:
        """The upcrossing bound `(u/v)^n`."""
        return (self.u / self.v) ** n

    def capital_ok(self) -> bool:
        """Whether the capital is at least `(v/u)^N` at every cell completing the `N`-th upcrossing."""
        return all(
            (self.capital.value(w) or Fraction(0)) >= (self.v / self.u) ** self.crossings[w] for w in self.completions
        )


def upcrossing_scan(m: Martingale, u: Fraction, v: Fraction) -> UpcrossingScan:
    """
    Run the "buy low, sell high" strategy that follows `m` while it travels from below `u` to above `v`.

    The strategy starts idle with capital 1. At each cell it first updates its state: an idle strategy
    becomes active when `m < u`, an active one completes an upcrossing and goes idle when `m > v`.
    An active strategy then scales its capital with `m`'s relative move to each child; an idle one,
    or one sitting on a cell where `m` is 0 or undefined, holds its capital.

    :param m: The martingale to follow.
    :param u: The lower level, `0 < u`.
    :param v: The upper level, `u < v`.
    :return: The scan, whose capital is itself a martingale with respect to `m`'s reference measure.
    """
    if not 0 < u < v:
        raise CantorLabException("Upcrossing levels must satisfy 0 < u < v.")
    capital: dict[BitString, Fraction | None] = {EMPTY: Fraction(1)}
    crossings: dict[BitString, int] = {}
    completions: list[BitString] = []
    # (cell, active before the update at the cell, completed crossings before the update)
    frontier: list[tuple[BitString, bool, int]] = [(EMPTY, False, 0)]
    while frontier:
        following: list[tuple[BitString, bool, int]] = []
        for word, active, count in frontier:
            value = m.value(word)
            if value is not None:
                if not active and value < u:
                    active = True
                elif active and value > v:
                    active, count = False, count + 1
                    completions.append(word)
            crossings[word] = count
            if len(word) >= m.depth:
                continue
            funds = capital[word] or Fraction(0)
            for child in word.children():
                child_value = m.value(child)
                if active and value and child_value is not None:
                    capital[child] = funds * child_value / value
                else:
                    capital[child] = funds
                following.append((child, active, count))
        frontier = following
    for word in capital:
        if m.reference.mass(word) == 0:
            capital[word] = None
    return UpcrossingScan(
        u=Fraction(u),
        v=Fraction(v),
        capital=Martingale(m.depth, capital, m.reference),
        crossings=crossings,
        completions=tuple(completions),
    )


def follower_martingale(m: Martingale, u: Fraction, v: Fraction) -> Martingale:
    """
    Return the capital of the strategy following `m`'s upcrossings of `[u, v]`.

    :param m: The martingale to follow.
    :param u: The lower level.
    :param v: The upper level.
    :return: A martingale starting at 1 that is at least `(v/u)^N` after `N` completed upcrossings.
    """
    return upcrossing_scan(m, u, v).capital
