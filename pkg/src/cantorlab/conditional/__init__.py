"""Conditional probabilities along paths and the martingales behind their limits."""

from .convergence_trace import (
    DEFAULT_PRECISION,
    DEFAULT_TOLERANCE,
    DEFAULT_WINDOW,
    AdditivityEntry,
    AdditivityReport,
    ConditionalTracer,
    ConvergenceTrace,
    Verdict,
    additivity_of_limits,
    classify,
    conditional_trace,
)
from .follower import UpcrossingScan, follower_martingale, upcrossing_scan
from .martingale import (
    ExceedResult,
    Martingale,
    MartingaleReport,
    MartingaleViolation,
    conditional_martingale,
    exceed_set,
    martingale_check,
)
from .path_generator import PathGenerator

__all__ = [
    "DEFAULT_PRECISION",
    "DEFAULT_TOLERANCE",
    "DEFAULT_WINDOW",
    "AdditivityEntry",
    "AdditivityReport",
    "ConditionalTracer",
    "ConvergenceTrace",
    "Verdict",
    "additivity_of_limits",
    "classify",
    "conditional_trace",
    "UpcrossingScan",
    "follower_martingale",
    "upcrossing_scan",
    "ExceedResult",
    "Martingale",
    "MartingaleReport",
    "MartingaleViolation",
    "conditional_martingale",
    "exceed_set",
    "martingale_check",
    "PathGenerator",
]
