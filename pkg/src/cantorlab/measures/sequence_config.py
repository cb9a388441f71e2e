from bisect import bisect_left, bisect_right
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from typing_extensions import Self

from ..core.exceptions import ConfigException, InsufficientTermsException
from ..core.utils import format_rational, parse_rational


@dataclass(frozen=True, slots=True)
class SequenceConfig:
    """
    A finite strictly increasing rational sequence `a₁ < a₂ < …` and the limit it stands for.

    **Notes:**

    -   The limit `alpha_limit` replaces a possibly non-computable real; every finite-depth mass
        depends on finitely many listed terms only.
    """

    a: tuple[Fraction, ...]
    alpha_limit: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(Fraction(t) for t in self.a))
        object.__setattr__(self, "alpha_limit", Fraction(self.alpha_limit))
        if not self.a:
            raise ConfigException("The sequence 'a' must list at least one term.")
        if self.a[0] <= 0:
            raise ConfigException("The first sequence term must be positive.")
        if any(x >= y for x, y in zip(self.a, self.a[1:])):
            raise ConfigException("The sequence 'a' must be strictly increasing.")
        if not self.a[-1] < self.alpha_limit < 1:
            raise ConfigException("The limit must exceed every listed term and be below 1.")

    @classmethod
    def default(cls, terms: int = 16) -> Self:
        """
        Return the default dyadic sequence `a_i = (1 - 4^-i)/3` with limit `1/3`.

        :param terms: The number of listed terms.
        :return: The configuration.
        """
        if terms < 1:
            raise ConfigException("The default sequence needs at least one term.")
        return cls(tuple((1 - Fraction(1, 4**i)) / 3 for i in range(1, terms + 1)), Fraction(1, 3))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """
        Build a configuration from `{"seq": [...], "alpha": "..."}`, or the default with `"terms"`.

        :param data: The JSON object.
        :return: The configuration.
        """
        if "seq" not in data:
            return cls.default(int(data.get("terms", 16)))
        seq: Sequence[str | int] = data["seq"]
        if "alpha" not in data:
            raise ConfigException("A sequence spec listing 'seq' must also give 'alpha'.")
        return cls(tuple(parse_rational(t) for t in seq), parse_rational(data["alpha"]))

    def to_json(self) -> dict[str, Any]:
        """Return the JSON form."""
        return {"seq": [format_rational(t) for t in self.a], "alpha": format_rational(self.alpha_limit)}

    @property
    def length(self) -> int:
        """The number of listed terms."""
        return len(self.a)

    def term(self, k: int) -> Fraction:
        """
        Return `a_k`, with `a_0 = 0`.

        :param k: The index, `0 <= k <= length`.
        :return: The term.
        :raises InsufficientTermsException: If `k` exceeds the listed terms.
        """
        if k > len(self.a):
            raise InsufficientTermsException(required=k, available=len(self.a))
        return Fraction(0) if k == 0 else self.a[k - 1]

    def require(self, n: int) -> None:
        """Raise `InsufficientTermsException` unless at least `n` terms are listed."""
        if n > len(self.a):
            raise InsufficientTermsException(required=n, available=len(self.a))

    def strips_meeting(self, y: tuple[Fraction, Fraction], n: int) -> range:
        """
        Return the indices `1 <= k <= n` whose strip `[a_{k-1}, a_k)` meets `[y0, y1)`.

        :param y: A non-empty half-open interval of `[0, 1)`.
        :param n: The number of terms consulted.
        :return: The indices, as a contiguous range.
        :raises InsufficientTermsException: If fewer than `n` terms are listed.
        """
        self.require(n)
        first = bisect_right(self.a, y[0], hi=n) + 1
        last = min(n, bisect_left(self.a, y[1], hi=n) + 1)
        return range(first, last + 1)

    def truncated(self, n: int) -> "SequenceConfig":
        """Return the configuration keeping only the first `n` terms."""
        self.require(n)
        return SequenceConfig(self.a[:n], self.alpha_limit)
