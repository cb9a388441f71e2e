from fractions import Fraction
from typing import Any

from typing_extensions import final, override

from ...core.cantor import BitString, Rect
from ..cantor_measures import CantorMeasure
from ..kernel_config import KernelConfig
from .measure_oracle import ExactMeasureOracle


@final
class KernelMeasure(ExactMeasureOracle):
    """
    The joint measure of `ω ~ P₁` and `ω′ ~ P^ω`, for a kernel of finite depth.

    `mass(a1, a2) = Σ_w P₁([a1] ∩ [w])·P^w(a2)`, over the kernel words `w` compatible with `a1`.
    """

    __slots__ = ("__p1", "__kernel")

    def __init__(self, p1: CantorMeasure, kernel: KernelConfig) -> None:
        """
        Initialize an instance of `KernelMeasure`.

        :param p1: The first marginal.
        :param kernel: The kernel.
        """
        self.__p1: CantorMeasure = p1
        self.__kernel: KernelConfig = kernel

    @property
    def p1(self) -> CantorMeasure:
        """The first marginal."""
        return self.__p1

    @property
    def kernel(self) -> KernelConfig:
        """The kernel."""
        return self.__kernel

    @override
    def _exact_mass(self, rect: Rect) -> Fraction:
        j = self.__kernel.depth
        if len(rect.a1) >= j:
            return self.__p1.mass(rect.a1) * self.__kernel.fiber(rect.a1).mass(rect.a2)
        return sum(
            (
                self.__p1.mass(rect.a1 + tail) * self.__kernel.fiber(rect.a1 + tail).mass(rect.a2)
                for tail in BitString.all_of_length(j - len(rect.a1))
            ),
            Fraction(0),
        )

    @override
    def to_spec(self) -> dict[str, Any]:
        return {
            "kind": "kernel",
            "p1": self.__p1.to_spec(),
            "depth": self.__kernel.depth,
            "fibers": {str(w): fiber.to_spec() for w, fiber in sorted(self.__kernel.table.items())},
        }


def from_kernel(p1: CantorMeasure, kernel: KernelConfig) -> KernelMeasure:
    """Return the joint measure of `p1` and `kernel`."""
    return KernelMeasure(p1, kernel)
