from collections.abc import Mapping
from dataclasses import dataclass, field

from typing_extensions import Self

from ..core.cantor import BitString
from ..core.exceptions import ConfigException
from .cantor_measures import CantorMeasure


@dataclass(frozen=True, slots=True)
class KernelConfig:
    """
    A probability kernel from `Ω₁` to `Ω₂` that depends only on the first `depth` bits of `ω`.

    **Notes:**

    -   `table` maps every word of length `depth` to the fibre measure on `Ω₂` used for all
        sequences extending it.
    """

    depth: int
    table: Mapping[BitString, CantorMeasure] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ConfigException("The kernel depth must be non-negative.")
        table = {key if isinstance(key, BitString) else BitString(key): fiber for key, fiber in self.table.items()}
        missing = [w for w in BitString.all_of_length(self.depth) if w not in table]
        if missing or len(table) != 1 << self.depth:
            raise ConfigException(f"A depth-{self.depth} kernel needs one fibre per word of length {self.depth}.")
        object.__setattr__(self, "table", table)

    @classmethod
    def constant(cls, fiber: CantorMeasure, depth: int = 0) -> Self:
        """Return the kernel using the same fibre everywhere."""
        return cls(depth, {w: fiber for w in BitString.all_of_length(depth)})

    def fiber(self, omega: BitString) -> CantorMeasure:
        """
        Return the fibre measure for sequences extending `omega`.

        :param omega: A word of length at least `depth`.
        :return: The fibre.
        """
        if len(omega) < self.depth:
            raise ConfigException(f"Kernel fibres are keyed by words of length {self.depth}, got {omega}.")
        return self.table[omega.prefix(self.depth)]
