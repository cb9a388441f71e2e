"""Trimming of increasing cover sequences against a Γ-oracle, with its exact measure ledger."""

from .bounds import BoundReport, CoverageReport, LedgerEntry, convergence_level, coverage_check, verify_bounds
from .gamma_oracle import AdversarialGamma, GammaOracle, NestedGamma, adversarial_gamma, honest_gamma
from .naive_trim import naive_trim
from .scenarios import (
    TrimScenario,
    coverage_scenario,
    coverage_scenarios,
    overlapping_measure,
    overlapping_scenario,
    random_covers,
)
from .slowdown import SlowdownSchedule, dyadic_slowdown, no_slowdown, parse_slowdown, scaled_slowdown
from .stripe import Stripe, vertical_size
from .trim_config import DEFAULT_EPSILON, DEFAULT_MAXDEPTH, CoverSequence, TrimConfig
from .trimmer import GoodWitness, Trimmer, TrimResult, is_good, trim

__all__ = [
    "BoundReport",
    "CoverageReport",
    "LedgerEntry",
    "convergence_level",
    "coverage_check",
    "verify_bounds",
    "AdversarialGamma",
    "GammaOracle",
    "NestedGamma",
    "adversarial_gamma",
    "honest_gamma",
    "naive_trim",
    "TrimScenario",
    "coverage_scenario",
    "coverage_scenarios",
    "overlapping_measure",
    "overlapping_scenario",
    "random_covers",
    "SlowdownSchedule",
    "dyadic_slowdown",
    "no_slowdown",
    "parse_slowdown",
    "scaled_slowdown",
    "Stripe",
    "vertical_size",
    "DEFAULT_EPSILON",
    "DEFAULT_MAXDEPTH",
    "CoverSequence",
    "TrimConfig",
    "GoodWitness",
    "Trimmer",
    "TrimResult",
    "is_good",
    "trim",
]
