from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from typing_extensions import Self

from ..core.cantor import BasicSet
from ..core.exceptions import ConfigException
from ..core.utils import format_rational, parse_rational

DEFAULT_EPSILON: Fraction = Fraction(1, 8)
DEFAULT_MAXDEPTH: int = 10


@dataclass(frozen=True, slots=True)
class TrimConfig:
    """
    The threshold `ε`, the closeness schedule `δ₁ > δ₂ > …` and the search depth of a trim.

    **Notes:**

    -   The schedule must be positive, strictly decreasing and sum to less than `ε`.
    """

    epsilon: Fraction
    deltas: tuple[Fraction, ...]
    maxdepth: int = DEFAULT_MAXDEPTH

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "deltas", tuple(Fraction(d) for d in self.deltas))
        if not 0 < self.epsilon < 1:
            raise ConfigException("Epsilon must lie strictly between 0 and 1.")
        if any(d <= 0 for d in self.deltas):
            raise ConfigException("Every delta must be positive.")
        if any(x <= y for x, y in zip(self.deltas, self.deltas[1:])):
            raise ConfigException("The deltas must be strictly decreasing.")
        if sum(self.deltas, Fraction(0)) >= self.epsilon:
            raise ConfigException("The deltas must sum to less than epsilon.")
        if self.maxdepth < 0:
            raise ConfigException("The search depth must be non-negative.")

    @classmethod
    def default(cls, stages: int, epsilon: Fraction = DEFAULT_EPSILON, maxdepth: int = DEFAULT_MAXDEPTH) -> Self:
        """
        Return the configuration with `δ_i = ε·2⁻ⁱ⁻¹` for `i = 1…stages`.

        :param stages: The number of deltas.
        :param epsilon: The threshold.
        :param maxdepth: The search depth.
        :return: The configuration.
        """
        return cls(Fraction(epsilon), tuple(Fraction(epsilon) / (1 << (i + 1)) for i in range(1, stages + 1)), maxdepth)

    @classmethod
    def from_json(cls, data: dict[str, Any], stages: int) -> Self:
        """
        Build a configuration from `{"epsilon", "deltas", "maxdepth"}`; missing deltas use the default schedule.

        :param data: The JSON object.
        :param stages: The number of cover stages, used by the default schedule.
        :return: The configuration.
        """
        epsilon = parse_rational(data.get("epsilon", format_rational(DEFAULT_EPSILON)))
        maxdepth = int(data.get("maxdepth", DEFAULT_MAXDEPTH))
        if "deltas" not in data:
            return cls.default(stages, epsilon, maxdepth)
        deltas: Sequence[str | int] = data["deltas"]
        return cls(epsilon, tuple(parse_rational(d) for d in deltas), maxdepth)

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {
            "epsilon": format_rational(self.epsilon),
            "deltas": [format_rational(d) for d in self.deltas],
            "maxdepth": self.maxdepth,
        }

    def delta(self, i: int) -> Fraction:
        """
        Return `δ_i`, counting from 1.

        :raises ConfigException: If the schedule is too short.
        """
        if not 1 <= i <= len(self.deltas):
            raise ConfigException(f"No delta configured for stage {i}.")
        return self.deltas[i - 1]

    @property
    def final_bound(self) -> Fraction:
        """The bound `ε + 2Σδ_i` on every trimmed set."""
        return self.epsilon + 2 * sum(self.deltas, Fraction(0))


@dataclass(frozen=True, slots=True)
class CoverSequence:
    """An increasing sequence of basic sets `U₁ ⊆ U₂ ⊆ …`."""

    sets: tuple[BasicSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(self.sets))
        for k, (smaller, larger) in enumerate(zip(self.sets, self.sets[1:]), start=1):
            if not smaller.is_subset(larger):
                raise ConfigException(f"Cover {k} is not contained in cover {k + 1}.")

    @classmethod
    def parse(cls, texts: Sequence[str]) -> Self:
        """Parse one basic set text per stage."""
        return cls(tuple(BasicSet.parse(t) for t in texts))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[BasicSet]:
        return iter(self.sets)

    def stage(self, k: int) -> BasicSet:
        """Return `U_k`, counting from 1."""
        if not 1 <= k <= len(self.sets):
            raise ConfigException(f"No cover at stage {k}.")
        return self.sets[k - 1]

    def to_json(self) -> list[str]:
        """Return the text form of each stage."""
        return [str(u) for u in self.sets]
