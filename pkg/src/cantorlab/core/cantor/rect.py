from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Self

from ..exceptions import CantorLabException
from .bit_string import BitString


def parse_cylinder(text: str) -> BitString:
    """
    Parse a cylinder token: `*` (or `[]`) for the empty word, `[bits]` otherwise.

    :param text: The token.
    :return: The named word.
    :raises CantorLabException: If the token is malformed.
    """
    token = text.strip()
    if token == "*":
        return BitString("")
    if len(token) >= 2 and token[0] == "[" and token[-1] == "]":
        return BitString(token[1:-1])
    raise CantorLabException(f"Malformed cylinder token {text!r}; expected '*' or '[bits]'.")


def format_cylinder(word: BitString) -> str:
    """Render a word as a cylinder token (`*` for the empty word)."""
    return f"[{word.bits}]" if word.bits else "*"


@dataclass(frozen=True, order=True, slots=True)
class Rect:
    """The rectangle `[a1]×[a2]` in the product of two Cantor spaces; `(ε, ε)` is the full square."""

    a1: BitString
    a2: BitString

    @classmethod
    def of(cls, a1: str | BitString = "", a2: str | BitString = "") -> Self:
        """Build a rectangle from two words given as text or `BitString`."""
        return cls(
            a1 if isinstance(a1, BitString) else BitString(a1),
            a2 if isinstance(a2, BitString) else BitString(a2),
        )

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse the text form `[a1]x[a2]` (with `*` for an empty word).

        :param text: The text form.
        :return: The rectangle.
        """
        parts = text.strip().split("x")
        if len(parts) != 2:
            raise CantorLabException(f"Malformed rectangle {text!r}; expected '<cyl>x<cyl>'.")
        return cls(parse_cylinder(parts[0]), parse_cylinder(parts[1]))

    def __str__(self) -> str:
        return f"{format_cylinder(self.a1)}x{format_cylinder(self.a2)}"

    @property
    def depth(self) -> int:
        """The maximal coordinate depth."""
        return max(len(self.a1), len(self.a2))

    def contains(self, other: "Rect") -> bool:
        """Check whether `other ⊆ self`."""
        return self.a1.is_prefix_of(other.a1) and self.a2.is_prefix_of(other.a2)

    def intersect(self, other: "Rect") -> "Rect | None":
        """
        Return the intersection of two rectangles.

        :param other: The other rectangle.
        :return: The intersection, or `None` if it is empty.
        """
        x, y = self.a1.meet(other.a1), self.a2.meet(other.a2)
        return None if x is None or y is None else Rect(x, y)

    def contains_point(self, x: BitString, y: BitString) -> bool:
        """Check whether a point, given by long enough prefixes of its coordinates, lies in the rectangle."""
        return self.a1.is_prefix_of(x) and self.a2.is_prefix_of(y)

    def split_x(self) -> tuple["Rect", "Rect"]:
        """Split along the first coordinate."""
        left, right = self.a1.children()
        return Rect(left, self.a2), Rect(right, self.a2)

    def split_y(self) -> tuple["Rect", "Rect"]:
        """Split along the second coordinate."""
        bottom, top = self.a2.children()
        return Rect(self.a1, bottom), Rect(self.a1, top)

    def uniform_mass(self) -> Fraction:
        """The uniform measure of the rectangle."""
        return self.a1.uniform_mass() * self.a2.uniform_mass()


FULL_SQUARE: Rect = Rect(BitString(""), BitString(""))
"""The whole product space."""
