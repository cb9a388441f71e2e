"""Computable measures on the product of two Cantor spaces, their marginals and conditionals."""

from .cantor_measures import BernoulliMeasure, CantorMeasure, DiracMeasure, TabulatedMeasure, UniformMeasure
from .kernel_config import KernelConfig
from .measure_spec import cantor_measure_from_spec, measure_from_spec
from .measure_utils import MAX_REFINEMENTS, MarginalMeasure, cond_interval, marginal, set_mass
from .oracles import (
    ExactMeasureOracle,
    GridOracle,
    KernelMeasure,
    MeasureOracle,
    OscillatingMeasure,
    PerturbedOracle,
    ProductMeasure,
    RoundedOracle,
    SegmentsMeasure,
    StaircaseMeasure,
    from_kernel,
    oscillating,
    product,
    segments,
    staircase,
    uniform,
)
from .sequence_config import SequenceConfig
from .validation import MeasureValidator, ValidationReport, Violation, report_to_json, validate

__all__ = [
    "BernoulliMeasure",
    "CantorMeasure",
    "DiracMeasure",
    "TabulatedMeasure",
    "UniformMeasure",
    "KernelConfig",
    "cantor_measure_from_spec",
    "measure_from_spec",
    "MAX_REFINEMENTS",
    "MarginalMeasure",
    "cond_interval",
    "marginal",
    "set_mass",
    "ExactMeasureOracle",
    "GridOracle",
    "KernelMeasure",
    "MeasureOracle",
    "OscillatingMeasure",
    "PerturbedOracle",
    "ProductMeasure",
    "RoundedOracle",
    "SegmentsMeasure",
    "StaircaseMeasure",
    "from_kernel",
    "oscillating",
    "product",
    "segments",
    "staircase",
    "uniform",
    "SequenceConfig",
    "MeasureValidator",
    "ValidationReport",
    "Violation",
    "report_to_json",
    "validate",
]
