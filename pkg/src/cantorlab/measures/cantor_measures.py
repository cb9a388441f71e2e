from abc import ABC, abstractmethod
from collections.abc import Mapping
from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ..core.cantor import EMPTY, BitString, CylinderSet
from ..core.exceptions import ConfigException
from ..core.utils import attributes_repr, format_rational, formatted_repr


class CantorMeasure(ABC):
    """
    An exact probability measure on one Cantor-space factor, given by its cylinder masses.

    **Notes:**

    -   One-factor measures serve as the first marginal `P₁`, as the second factor of a product
        measure and as the fibres of a kernel.
    """

    # Allow subclasses to define __slots__
    __slots__ = ()

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(spec=self.to_spec()))

    def mass(self, word: BitString) -> Fraction:
        """
        Return the exact mass of the cylinder `[word]`.

        :param word: The cylinder word.
        :return: The mass, in `[0, 1]`.
        """
        return self._mass(word)

    def measure(self, cylinders: CylinderSet) -> Fraction:
        """Return the exact mass of a finite union of cylinders."""
        return cylinders.measure(self._mass)

    @abstractmethod
    def _mass(self, word: BitString) -> Fraction:
        """Compute the mass of a cylinder."""
        pass

    @abstractmethod
    def to_spec(self) -> dict[str, Any]:
        """Return the JSON spec that rebuilds this measure."""
        pass


@final
class UniformMeasure(CantorMeasure):
    """The uniform (Lebesgue) measure: `[a] ↦ 2^-|a|`."""

    __slots__ = ()

    @override
    def _mass(self, word: BitString) -> Fraction:
        return word.uniform_mass()

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "uniform"}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniformMeasure)

    def __hash__(self) -> int:
        return hash(UniformMeasure)


@final
class BernoulliMeasure(CantorMeasure):
    """The i.i.d. measure where every bit is 1 with probability `p`."""

    __slots__ = ("__p",)

    def __init__(self, p: Fraction) -> None:
        """
        Initialize an instance of `BernoulliMeasure`.

        :param p: The probability of a 1 bit, in `[0, 1]`.
        :raises ConfigException: If `p` is outside `[0, 1]`.
        """
        if not 0 <= p <= 1:
            raise ConfigException(f"The Bernoulli parameter must lie in [0, 1], got {p}.")
        self.__p: Fraction = Fraction(p)

    @property
    def p(self) -> Fraction:
        """The probability of a 1 bit."""
        return self.__p

    @override
    def _mass(self, word: BitString) -> Fraction:
        ones = word.bits.count("1")
        return self.__p**ones * (1 - self.__p) ** (len(word) - ones)

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "bernoulli", "p": format_rational(self.__p)}


@final
class DiracMeasure(CantorMeasure):
    """The point mass at the sequence `prefix` followed by zeros."""

    __slots__ = ("__prefix",)

    def __init__(self, prefix: BitString = EMPTY) -> None:
        """
        Initialize an instance of `DiracMeasure`.

        :param prefix: The explicit prefix of the atom; the remaining bits are all zero.
        """
        self.__prefix: BitString = prefix

    @property
    def prefix(self) -> BitString:
        """The explicit prefix of the atom."""
        return self.__prefix

    @override
    def _mass(self, word: BitString) -> Fraction:
        head, tail = word.bits[: len(self.__prefix)], word.bits[len(self.__prefix) :]
        return Fraction(int(self.__prefix.bits.startswith(head) and not tail.strip("0")))

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "dirac", "prefix": self.__prefix.bits}


@final
class TabulatedMeasure(CantorMeasure):
    """A measure given by its masses on the depth-`j` cylinders, uniform inside each of them."""

    __slots__ = ("__depth", "__weights")

    def __init__(self, depth: int, weights: Mapping[BitString | str, Fraction]) -> None:
        """
        Initialize an instance of `TabulatedMeasure`.

        :param depth: The table depth `j`.
        :param weights: Masses of depth-`j` words; missing words have mass 0.
        :raises ConfigException: If a key has the wrong length, a weight is negative or the total is not 1.
        """
        table: dict[BitString, Fraction] = {}
        for key, weight in weights.items():
            word = key if isinstance(key, BitString) else BitString(key)
            if len(word) != depth:
                raise ConfigException(f"Tabulated weight key {word} does not have length {depth}.")
            if weight < 0:
                raise ConfigException(f"Tabulated weight for {word} is negative.")
            table[word] = Fraction(weight)
        if sum(table.values(), Fraction(0)) != 1:
            raise ConfigException("Tabulated weights must sum to 1.")
        self.__depth: int = depth
        self.__weights: dict[BitString, Fraction] = table

    @property
    def depth(self) -> int:
        """The table depth."""
        return self.__depth

    @override
    def _mass(self, word: BitString) -> Fraction:
        if len(word) >= self.__depth:
            return self.__weights.get(word.prefix(self.__depth), Fraction(0)) / (1 << (len(word) - self.__depth))
        return sum((w for key, w in self.__weights.items() if word.is_prefix_of(key)), Fraction(0))

    @override
    def to_spec(self) -> dict[str, Any]:
        return {
            "kind": "tabulated",
            "depth": self.__depth,
            "weights": {str(k): format_rational(v) for k, v in sorted(self.__weights.items())},
        }
