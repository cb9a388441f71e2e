from collections.abc import Callable
from fractions import Fraction
from threading import Lock

from typing_extensions import Self

from ..core.cantor import BitString
from ..core.exceptions import CantorLabException, ConfigException
from ..core.utils import (
    attributes_repr,
    format_rational,
    formatted_repr,
    get_callable_name,
    parse_rational,
    validate_callable,
)


class PathGenerator:
    """
    A deterministic infinite binary sequence, queried bit by bit.

    **Notes:**

    -   Bits are memoized on first query, so repeated queries always agree even when the
        underlying callable is not pure. The memo is guarded by a lock.
    """

    @classmethod
    def zeros(cls) -> Self:
        """The sequence `000…`."""
        return cls(lambda i: 0, "zeros")

    @classmethod
    def ones(cls) -> Self:
        """The sequence `111…`."""
        return cls(lambda i: 1, "ones")

    @classmethod
    def periodic(cls, word: BitString | str) -> Self:
        """
        The periodic sequence `www…`.

        :param word: The nonempty period.
        :return: The path.
        """
        period = word if isinstance(word, BitString) else BitString(word)
        if not len(period):
            raise ConfigException("A periodic path needs a nonempty period.")
        return cls(lambda i: period[i % len(period)], f"periodic:{period.bits}")

    @classmethod
    def from_prefix(cls, prefix: BitString | str) -> Self:
        """The sequence `prefix` followed by zeros."""
        word = prefix if isinstance(prefix, BitString) else BitString(prefix)
        return cls(lambda i: word[i] if i < len(word) else 0, f"prefix:{word.bits}")

    @classmethod
    def from_rational(cls, q: Fraction) -> Self:
        """
        The binary expansion of a rational in `[0, 1)` (the terminating one for dyadic rationals).

        :param q: The rational.
        :return: The path; `1/3` gives `0101…`.
        """
        if not 0 <= q < 1:
            raise ConfigException(f"A rational path needs a value in [0, 1), got {q}.")
        value = Fraction(q)
        return cls(lambda i: int(value * (1 << (i + 1))) % 2, f"rational:{format_rational(value)}")

    @classmethod
    def from_callable(cls, bit: Callable[[int], int], label: str | None = None) -> Self:
        """
        Wrap an arbitrary bit function.

        :param bit: The function mapping an index `i >= 0` to the `i`-th bit.
        :param label: An optional description; defaults to the callable's name.
        :return: The path.
        """
        validate_callable(bit)
        return cls(bit, label or f"callable:{get_callable_name(bit)}")

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse a path spec: `zeros`, `ones`, `periodic:<word>`, `rational:<p/q>` or `prefix:<word>`.

        :param text: The spec.
        :return: The path.
        :raises ConfigException: If the spec is malformed.
        """
        kind, _, argument = text.strip().partition(":")
        try:
            if kind == "zeros" and not argument:
                return cls.zeros()
            if kind == "ones" and not argument:
                return cls.ones()
            if kind == "periodic":
                return cls.periodic(argument)
            if kind == "rational":
                return cls.from_rational(parse_rational(argument))
            if kind == "prefix":
                return cls.from_prefix(argument)
        except ConfigException:
            raise
        except CantorLabException as e:
            raise ConfigException(f"Invalid path spec {text!r}: {e.errors}") from e
        raise ConfigException(f"Unknown path spec {text!r}.")

    # Attributes for the PathGenerator
    __slots__ = ("__bit", "__label", "__bits", "__thread_lock")

    def __init__(self, bit: Callable[[int], int], label: str) -> None:
        """
        Initialize an instance of `PathGenerator`.

        :param bit: The function mapping an index to a bit.
        :param label: A short description of the path.
        """
        self.__bit: Callable[[int], int] = bit
        self.__label: str = label
        self.__bits: list[int] = []
        self.__thread_lock: Lock = Lock()

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(label=self.__label))

    def __str__(self) -> str:
        return self.__label

    @property
    def label(self) -> str:
        """The description of the path."""
        return self.__label

    def bit(self, i: int) -> int:
        """
        Return the `i`-th bit (0-based).

        :param i: The index.
        :return: 0 or 1.
        :raises CantorLabException: If the bit function returns something else.
        """
        with self.__thread_lock:
            while len(self.__bits) <= i:
                value = self.__bit(len(self.__bits))
                if value not in (0, 1):
                    raise CantorLabException(f"Path {self.__label} produced a non-bit {value!r}.")
                self.__bits.append(int(value))
            return self.__bits[i]

    def prefix(self, n: int) -> BitString:
        """Return the first `n` bits as a word."""
        if n > 0:
            self.bit(n - 1)
        return BitString("".join(str(b) for b in self.__bits[:n]))
