from collections.abc import Iterable
from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes of the command line."""

    OK = 0
    VIOLATED = 1
    CONFIG = 2
    PRECONDITION = 3


# Lowest first: a configuration error outranks a violation, which outranks an unmet precondition.
_SEVERITY: dict[ExitCode, int] = {
    ExitCode.OK: 0,
    ExitCode.PRECONDITION: 1,
    ExitCode.VIOLATED: 2,
    ExitCode.CONFIG: 3,
}


def worst(codes: Iterable[ExitCode]) -> ExitCode:
    """
    Return the most severe of several exit codes.

    :param codes: The codes.
    :return: The worst code, `OK` when there are none.
    """
    return max(codes, key=_SEVERITY.__getitem__, default=ExitCode.OK)
