from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..core.cantor import BitString, CylinderFunction, Rect
from ..core.exceptions import CantorLabException
from ..core.utils import ceil_log2, floor_log2, format_rational
from ..measures import CantorMeasure, KernelConfig, from_kernel
from .conditional_family import ConditionalTestFamily
from .expectation import ExpectationTest, integral

CellValue = Callable[[BitString, BitString, Fraction], Fraction]


@dataclass(frozen=True, slots=True)
class Construction:
    """A function on the product built from a test and a family, with its exact integral."""

    name: str
    function: CylinderFunction[Rect]
    integral: Fraction

    @property
    def ok(self) -> bool:
        """Whether the integral is at most 1."""
        return self.integral <= 1

    def to_json(self) -> dict[str, Any]:
        """Return `{construction, integral, bound, ok}`."""
        return {"construction": self.name, "integral": format_rational(self.integral), "bound": "1", "ok": self.ok}


def _level(value: Fraction) -> int | None:
    return floor_log2(value) if value > 0 else None


def _build(
    name: str,
    t1: ExpectationTest,
    fam: ConditionalTestFamily,
    p1: CantorMeasure,
    kernel: KernelConfig,
    cell_value: CellValue,
) -> Construction:
    if t1.f.arity != 1:
        raise CantorLabException("The first test must live on one factor.")
    depth = max(t1.f.depth, fam.depth, kernel.depth)
    values: dict[Rect, Fraction] = {}
    for x in BitString.all_of_length(depth):
        t = t1.value(x)
        for y in BitString.all_of_length(depth):
            values[Rect(x, y)] = cell_value(x, y, t)
    function: CylinderFunction[Rect] = CylinderFunction(depth, values, arity=2)
    return Construction(name, function, integral(function, from_kernel(p1, kernel)))


def product_construction(
    t1: ExpectationTest, fam: ConditionalTestFamily, p1: CantorMeasure, kernel: KernelConfig
) -> Construction:
    """
    Build `T(ω, ω′) = t1(ω)·fam(ω, d(ω))(ω′)`, where `d = ⌊log₂ t1⌋` is clamped to `0…max_k`.

    :param t1: The test on `Ω₁`.
    :param fam: The conditional family.
    :param p1: The first marginal.
    :param kernel: The kernel.
    :return: The construction with its integral under `p1` and `kernel`.
    """

    def cell_value(x: BitString, y: BitString, t: Fraction) -> Fraction:
        level = _level(t)
        if level is None:
            return Fraction(0)
        return t * fam.member(x, min(max(level, 0), fam.max_k)).value(y)

    return _build("product", t1, fam, p1, kernel, cell_value)


def sum_construction(
    t1: ExpectationTest, fam: ConditionalTestFamily, p1: CantorMeasure, kernel: KernelConfig
) -> Construction:
    """
    Build `T′(ω, ω′) = Σ_{k < d(ω)} 2ᵏ·fam(ω, k)(ω′)` with `d = ⌊log₂ t1⌋`.

    Levels above `max_k` are dropped.

    :param t1: The test on `Ω₁`.
    :param fam: The conditional family.
    :param p1: The first marginal.
    :param kernel: The kernel.
    :return: The construction with its integral under `p1` and `kernel`.
    """

    def cell_value(x: BitString, y: BitString, t: Fraction) -> Fraction:
        level = _level(t)
        if level is None:
            return Fraction(0)
        levels = range(min(level, fam.max_k + 1))
        return sum((Fraction(1 << k) * fam.member(x, k).value(y) for k in levels), Fraction(0))

    return _build("sum", t1, fam, p1, kernel, cell_value)


def domination_violations(product: Construction, total: Construction, factor: int = 4) -> list[Rect]:
    """
    List the cells where `factor·T′ < T`.

    For families non-increasing in `k` and cells with `1 <= d <= max_k + 1`, `T < 4·T′` holds.

    :param product: The product construction `T`.
    :param total: The sum construction `T′`.
    :param factor: The domination factor.
    :return: The violating cells.
    """
    return [cell for cell, value in product.function.items() if factor * total.function.value(cell) < value]


@dataclass(frozen=True, slots=True)
class RatioTrim:
    """The product test divided by `2^{d+c}`, with over-heavy fibres scaled down."""

    function: CylinderFunction[Rect]
    untouched: tuple[BitString, ...]
    trimmed: tuple[BitString, ...]


def _fiber_integrals(tp: ExpectationTest, kernel: KernelConfig) -> dict[BitString, Fraction]:
    if tp.f.arity != 2:
        raise CantorLabException("Ratio trimming needs a test on the product.")
    depth = max(tp.f.depth, kernel.depth)
    f = tp.f.refine(depth)
    return {x: integral(f.fiber(x), kernel.fiber(x)) for x in BitString.all_of_length(depth)}


def ratio_trim(tp: ExpectationTest, d: int, c: int, kernel: KernelConfig) -> RatioTrim:
    """
    Divide a product test by `2^{d+c}` and scale every fibre whose integral under the kernel exceeds 1 back to 1.

    :param tp: The test on the product.
    :param d: The deficiency level.
    :param c: The constant.
    :param kernel: The kernel giving the fibre measures.
    :return: The trimmed function and the fibres left untouched.
    """
    scale = Fraction(1, 1 << (d + c)) if d + c >= 0 else Fraction(1 << -(d + c))
    integrals = _fiber_integrals(tp, kernel)
    depth = max(tp.f.depth, kernel.depth)
    f = tp.f.refine(depth)
    values: dict[Rect, Fraction] = {}
    untouched: list[BitString] = []
    trimmed: list[BitString] = []
    for x, total in integrals.items():
        factor = scale
        if total * scale > 1:
            factor = 1 / total
            trimmed.append(x)
        else:
            untouched.append(x)
        for y in BitString.all_of_length(depth):
            values[Rect(x, y)] = f.value(Rect(x, y)) * factor
    return RatioTrim(CylinderFunction(depth, values, arity=2), tuple(untouched), tuple(trimmed))


def minimal_untrimmed_constant(tp: ExpectationTest, d: int, kernel: KernelConfig) -> int:
    """
    Return the smallest `c >= 0` for which `ratio_trim(tp, d, c, kernel)` trims no fibre.

    :param tp: The test on the product.
    :param d: The deficiency level.
    :param kernel: The kernel.
    :return: The constant.
    """
    largest = max(_fiber_integrals(tp, kernel).values(), default=Fraction(0))
    if largest <= 0:
        return 0
    return max(0, ceil_log2(largest) - d)
