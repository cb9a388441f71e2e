from collections.abc import Callable
from typing import Any

from ..core.cantor import BitString, Rect
from ..core.exceptions import CantorLabException, ConfigException
from ..core.utils import parse_rational
from .cantor_measures import BernoulliMeasure, CantorMeasure, DiracMeasure, TabulatedMeasure, UniformMeasure
from .kernel_config import KernelConfig
from .measure_utils import MarginalMeasure
from .oracles import (
    KernelMeasure,
    MeasureOracle,
    OscillatingMeasure,
    PerturbedOracle,
    ProductMeasure,
    RoundedOracle,
    SegmentsMeasure,
    StaircaseMeasure,
)
from .sequence_config import SequenceConfig


def _require(spec: dict[str, Any], key: str) -> Any:
    if key not in spec:
        raise ConfigException(f"Measure spec of kind {spec.get('kind')!r} is missing the {key!r} key.")
    return spec[key]


def cantor_measure_from_spec(spec: dict[str, Any] | str) -> CantorMeasure:
    """
    Build a one-factor measure from its JSON spec.

    :param spec: `{"kind": "uniform" | "bernoulli" | "dirac" | "tabulated" | "marginal", ...}`, or the
        bare kind name for parameterless kinds.
    :return: The measure.
    :raises ConfigException: If the spec is malformed.
    """
    if isinstance(spec, str):
        spec = {"kind": spec}
    kind = spec.get("kind")
    try:
        if kind == "uniform":
            return UniformMeasure()
        if kind == "bernoulli":
            return BernoulliMeasure(parse_rational(_require(spec, "p")))
        if kind == "dirac":
            return DiracMeasure(BitString(str(spec.get("prefix", ""))))
        if kind == "tabulated":
            weights = {BitString(k): parse_rational(v) for k, v in dict(_require(spec, "weights")).items()}
            depth = int(spec.get("depth", len(next(iter(weights), BitString()))))
            return TabulatedMeasure(depth, weights)
        if kind == "marginal":
            return MarginalMeasure(measure_from_spec(_require(spec, "of")))
    except ConfigException:
        raise
    except CantorLabException as e:
        raise ConfigException(f"Invalid {kind} measure spec: {e.errors}") from e
    raise ConfigException(f"Unknown one-factor measure kind {kind!r}.")


def _sequence(spec: dict[str, Any]) -> SequenceConfig:
    return SequenceConfig.from_json(spec)


def _kernel(spec: dict[str, Any]) -> KernelMeasure:
    fibers = {BitString(k): cantor_measure_from_spec(v) for k, v in dict(_require(spec, "fibers")).items()}
    depth = int(spec.get("depth", len(next(iter(fibers), BitString()))))
    return KernelMeasure(cantor_measure_from_spec(spec.get("p1", "uniform")), KernelConfig(depth, fibers))


_BUILDERS: dict[str, Callable[[dict[str, Any]], MeasureOracle]] = {
    "uniform": lambda spec: ProductMeasure(UniformMeasure(), UniformMeasure()),
    "product": lambda spec: ProductMeasure(
        cantor_measure_from_spec(spec.get("p1", "uniform")), cantor_measure_from_spec(spec.get("p2", "uniform"))
    ),
    "oscillating": lambda spec: OscillatingMeasure(),
    "staircase": lambda spec: StaircaseMeasure(_sequence(spec)),
    "segments": lambda spec: SegmentsMeasure(_sequence(spec)),
    "kernel": _kernel,
    "rounded": lambda spec: RoundedOracle(measure_from_spec(_require(spec, "inner"))),
    "perturbed": lambda spec: PerturbedOracle(
        measure_from_spec(_require(spec, "inner")),
        Rect.parse(str(_require(spec, "rect"))),
        parse_rational(_require(spec, "delta")),
    ),
}


def measure_from_spec(spec: dict[str, Any] | str) -> MeasureOracle:
    """
    Build a product-space measure oracle from its JSON spec.

    :param spec: `{"kind": ..., ...}` with kind one of `uniform`, `product`, `oscillating`,
        `staircase`, `segments`, `kernel`, `rounded`, `perturbed`; or a bare kind name.
    :return: The oracle.
    :raises ConfigException: If the spec is malformed.
    """
    if isinstance(spec, str):
        spec = {"kind": spec}
    if not isinstance(spec, dict):
        raise ConfigException(f"A measure spec must be an object or a kind name, got {spec!r}.")
    kind = spec.get("kind")
    builder = _BUILDERS.get(str(kind))
    if builder is None:
        raise ConfigException(f"Unknown measure kind {kind!r}.")
    try:
        return builder(spec)
    except ConfigException:
        raise
    except (CantorLabException, ValueError, TypeError) as e:
        raise ConfigException(f"Invalid {kind} measure spec: {e}") from e
