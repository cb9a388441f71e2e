from collections.abc import Callable
from fractions import Fraction

from ..core.exceptions import ConfigException
from ..core.utils import parse_rational

SlowdownSchedule = Callable[[int], Fraction]
"""The width of the enclosure a Γ-oracle reports at a given prefix length."""


def no_slowdown(level: int) -> Fraction:
    """Report exact values at every level."""
    return Fraction(0)


def dyadic_slowdown(level: int) -> Fraction:
    """Report enclosures of width `2⁻ˡᵉᵛᵉˡ`."""
    return Fraction(1, 1 << level)


def scaled_slowdown(factor: Fraction | int) -> SlowdownSchedule:
    """
    Return the schedule of width `factor·2⁻ˡᵉᵛᵉˡ`.

    :param factor: The non-negative scale.
    :return: The schedule.
    """
    if factor < 0:
        raise ConfigException("A slowdown factor must be non-negative.")
    scale = Fraction(factor)

    def schedule(level: int) -> Fraction:
        return scale / (1 << level)

    return schedule


def parse_slowdown(text: str) -> SlowdownSchedule:
    """
    Parse `none`, `dyadic` or `scaled:<c>`.

    :param text: The schedule name.
    :return: The schedule.
    :raises ConfigException: If the name is unknown.
    """
    name, _, argument = text.strip().partition(":")
    if name == "none" and not argument:
        return no_slowdown
    if name == "dyadic" and not argument:
        return dyadic_slowdown
    if name == "scaled" and argument:
        return scaled_slowdown(parse_rational(argument))
    raise ConfigException(f"Unknown slowdown schedule {text!r}.")
