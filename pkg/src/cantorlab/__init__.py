"""Exact finite-depth experiments on conditional probabilities and blind randomness over the Cantor square."""

__version__ = "0.1.0"

from .core.exceptions import (
    CantorLabException,
    ConfigException,
    DepthExhaustedException,
    InsufficientTermsException,
    KraftViolationException,
    NotStableException,
    PreconditionException,
    ZeroMarginalException,
)

__all__ = [
    "CantorLabException",
    "ConfigException",
    "DepthExhaustedException",
    "InsufficientTermsException",
    "KraftViolationException",
    "NotStableException",
    "PreconditionException",
    "ZeroMarginalException",
]
