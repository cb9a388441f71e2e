from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from typing_extensions import Self

from ..core.cantor import BitString, CylinderFunction
from ..core.exceptions import CantorLabException
from ..measures import KernelConfig
from .expectation import integral

FamilyMember = Callable[[BitString, int], CylinderFunction[BitString]]


@dataclass(frozen=True, slots=True)
class ConditionalTestFamily:
    """
    Tests on `Ω₂` indexed by a depth-`depth` cell of `Ω₁` and a level `k = 0…max_k`.

    **Notes:**

    -   Every member is a one-factor function of depth at most `depth`.
    """

    depth: int
    max_k: int
    table: Mapping[tuple[BitString, int], CylinderFunction[BitString]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.depth < 0 or self.max_k < 0:
            raise CantorLabException("A test family needs non-negative depth and level bound.")
        keys = {(x, k) for x in BitString.all_of_length(self.depth) for k in range(self.max_k + 1)}
        if set(self.table) != keys:
            raise CantorLabException(f"A test family needs one member per depth-{self.depth} cell and level.")
        if any(f.arity != 1 or f.depth > self.depth for f in self.table.values()):
            raise CantorLabException(f"Family members must be one-factor functions of depth <= {self.depth}.")

    @classmethod
    def from_callable(cls, depth: int, max_k: int, member: FamilyMember) -> Self:
        """Tabulate `member(x, k)` on every depth-`depth` cell and level."""
        return cls(
            depth,
            max_k,
            {(x, k): member(x, k) for x in BitString.all_of_length(depth) for k in range(max_k + 1)},
        )

    @classmethod
    def constant(cls, depth: int, max_k: int, value: Fraction | int = 1) -> Self:
        """Return the family whose members are all the constant `value`."""
        one: CylinderFunction[BitString] = CylinderFunction.constant(value, depth)
        return cls.from_callable(depth, max_k, lambda x, k: one)

    def member(self, x: BitString, k: int) -> CylinderFunction[BitString]:
        """
        Return the member for the cell containing `x` at level `k`, refined to the family depth.

        :param x: A word of length at least `depth`.
        :param k: The level, `0 <= k <= max_k`.
        :return: The member.
        """
        if not 0 <= k <= self.max_k:
            raise CantorLabException(f"Level {k} is outside 0..{self.max_k}.")
        return self.table[(x.prefix(self.depth), k)].refine(self.depth)

    def violations(self, kernel: KernelConfig) -> list[tuple[BitString, int, Fraction]]:
        """
        List the members whose integral under their kernel fibre exceeds 1.

        :param kernel: The kernel, of depth at most `depth`.
        :return: `(cell, k, integral)` for every violating member.
        """
        if kernel.depth > self.depth:
            raise CantorLabException("The kernel is finer than the family.")
        found: list[tuple[BitString, int, Fraction]] = []
        for (x, k), f in sorted(self.table.items()):
            value = integral(f, kernel.fiber(x))
            if value > 1:
                found.append((x, k, value))
        return found
