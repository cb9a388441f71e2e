from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import Rect
from ...core.utils import overlap
from .measure_oracle import ExactMeasureOracle

_HALF = Fraction(1, 2)


def _dense_half(k: int) -> tuple[Fraction, Fraction]:
    # Odd stripes are dense on the top half, even stripes on the bottom half.
    return (_HALF, Fraction(1)) if k % 2 == 1 else (Fraction(0), _HALF)


def _tail(k0: int) -> Fraction:
    # Sum of 2^-k over k = k0, k0 + 2, k0 + 4, ...
    return Fraction(4, 3) / (1 << k0)


@final
class OscillatingMeasure(ExactMeasureOracle):
    """
    A measure whose conditional along `000…` oscillates between `1/3` and `2/3`.

    The vertical stripe `[2^-k, 2^-k+1)×Ω₂` (for `k >= 1`) carries mass `2^-k`, spread at double
    density over the top half of `Ω₂` for odd `k` and over the bottom half for even `k`.
    """

    __slots__ = ()

    @override
    def _exact_mass(self, rect: Rect) -> Fraction:
        y0, y1 = rect.a2.interval()
        first_one = rect.a1.bits.find("1")
        if first_one >= 0:
            x0, x1 = rect.a1.interval()
            return (x1 - x0) * 2 * overlap((y0, y1), _dense_half(first_one + 1))
        n = len(rect.a1)
        odd_k0 = n + 1 if n % 2 == 0 else n + 2
        even_k0 = n + 2 if n % 2 == 0 else n + 1
        return 2 * (
            _tail(odd_k0) * overlap((y0, y1), _dense_half(1)) + _tail(even_k0) * overlap((y0, y1), _dense_half(2))
        )

    @override
    def to_spec(self) -> dict[str, Any]:
        return {"kind": "oscillating"}


def oscillating() -> OscillatingMeasure:
    """Return the oscillating measure."""
    return OscillatingMeasure()
