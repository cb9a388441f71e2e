from fractions import Fraction

from .cantorlab_exception import CantorLabException


class ConfigException(CantorLabException):
    """Raised when a configuration object, JSON spec or CLI argument is invalid."""


class InsufficientTermsException(CantorLabException):
    """Raised when a sequence-driven oracle is asked for a rectangle finer than its listed terms support."""

    def __init__(self, required: int, available: int) -> None:
        """
        Initialize an instance of `InsufficientTermsException`.

        :param required: The number of sequence terms the query needs.
        :param available: The number of terms the configuration lists.
        """
        self.required: int = required
        self.available: int = available
        super().__init__(f"insufficient sequence terms: need {required}, have {available}")


class ZeroMarginalException(CantorLabException):
    """Raised when the marginal of a stripe cannot be bounded away from zero."""

    def __init__(self, prefix: str, depth: int | None = None) -> None:
        """
        Initialize an instance of `ZeroMarginalException`.

        :param prefix: The first-coordinate word whose stripe has zero marginal.
        :param depth: The depth reached when the stripe was met, if a scan was running.
        """
        self.prefix: str = prefix
        self.depth: int = len(prefix) if depth is None else depth
        super().__init__(f"zero-marginal stripe [{prefix}] at depth {self.depth}")


class NotStableException(CantorLabException):
    """Raised when a basic set is not stable in the stripe it is measured in."""

    def __init__(self, prefix: str) -> None:
        """
        Initialize an instance of `NotStableException`.

        :param prefix: The footprint of the stripe.
        """
        self.prefix: str = prefix
        super().__init__(f"not stable in stripe [{prefix}]")


class PreconditionException(CantorLabException):
    """Raised when an operation's precondition is not met at the explored depth."""

    def __init__(self, reason: str) -> None:
        """
        Initialize an instance of `PreconditionException`.

        :param reason: A short description of the unmet precondition.
        """
        self.reason: str = reason
        super().__init__(f"precondition not met: {reason}")


class DepthExhaustedException(PreconditionException):
    """Raised when a search reaches its depth limit before finding a good stripe."""

    def __init__(self, depth: int) -> None:
        """
        Initialize an instance of `DepthExhaustedException`.

        :param depth: The depth limit that was reached.
        """
        self.depth: int = depth
        super().__init__(f"depth exhausted before good stripe found (maxdepth={depth})")


class KraftViolationException(CantorLabException):
    """Raised when a code-length provider violates the Kraft inequality on a finite set."""

    def __init__(self, total: Fraction) -> None:
        """
        Initialize an instance of `KraftViolationException`.

        :param total: The Kraft sum that exceeded one.
        """
        self.total: Fraction = total
        super().__init__(f"Kraft violation by provider: sum of 2^-len is {total.numerator}/{total.denominator}")
