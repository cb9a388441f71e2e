from fractions import Fraction

from ..exceptions import ConfigException


def format_rational(value: Fraction | int) -> str:
    """
    Serialize a rational as `num/den` decimal text.

    :param value: The value to serialize.
    :return: The text form, e.g. `5/16` or `1/1`.
    """
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str | int) -> Fraction:
    """
    Parse a rational from `num/den` (or integer) text.

    :param text: The text to parse.
    :return: The parsed value in lowest terms.
    :raises ConfigException: If the text is not a rational literal.
    """
    if isinstance(text, bool):
        raise ConfigException(f"Expected a rational, got {text!r}.")
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigException(f"Expected a rational 'num/den', got {text!r}.") from e


def floor_log2(value: Fraction) -> int:
    """
    Return the exact floor of log2 of a positive rational.

    :param value: A positive rational.
    :return: The largest integer k with 2^k <= value.
    :raises ValueError: If the value is not positive.
    """
    if value <= 0:
        raise ValueError("floor_log2 is defined for positive values only.")
    k = value.numerator.bit_length() - value.denominator.bit_length()
    # The bit-length estimate is off by at most one
    if Fraction(2) ** k > value:
        k -= 1
    elif Fraction(2) ** (k + 1) <= value:
        k += 1
    return k


def ceil_log2(value: Fraction) -> int:
    """
    Return the exact ceiling of log2 of a positive rational.

    :param value: A positive rational.
    :return: The smallest integer k with value <= 2^k.
    """
    k = floor_log2(value)
    return k if Fraction(2) ** k == value else k + 1


def dyadic_ceil(value: Fraction, depth: int) -> Fraction:
    """
    Round a rational up to the dyadic grid of spacing 2^-depth.

    :param value: The value to round.
    :param depth: The grid depth.
    :return: The least multiple of 2^-depth that is >= value.
    """
    scale = 1 << depth
    return Fraction(-((-value.numerator * scale) // value.denominator), scale)


def dyadic_floor(value: Fraction, depth: int) -> Fraction:
    """
    Round a rational down to the dyadic grid of spacing 2^-depth.

    :param value: The value to round.
    :param depth: The grid depth.
    :return: The greatest multiple of 2^-depth that is <= value.
    """
    scale = 1 << depth
    return Fraction((value.numerator * scale) // value.denominator, scale)


def overlap(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> Fraction:
    """
    Return the length of the intersection of two half-open intervals.

    :param a: The interval `[a0, a1)`.
    :param b: The interval `[b0, b1)`.
    :return: `max(0, min(a1, b1) - max(a0, b0))`.
    """
    return max(Fraction(0), min(a[1], b[1]) - max(a[0], b[0]))
