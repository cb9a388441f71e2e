from abc import ABC, abstractmethod
from collections.abc import Callable
from typing import Any, TypeAlias

RunCallbackType: TypeAlias = Callable[..., Any]
"""Type alias for one experiment run: its return value is collected under the run's name."""


class RunService(ABC):
    """
    A pool of named experiment runs whose results are collected by name.

    **Notes:**

    -   The `suite` command submits one run per config file and reads every outcome back once all
        of them have finished, so it never shares mutable state with the runs themselves.

    -   Names are unique within a service. Results come back sorted by name, which keeps
        aggregated summaries independent of scheduling order.
    """

    # Allow subclasses to define __slots__
    __slots__ = ()

    @abstractmethod
    def submit(self, name: str, callback: RunCallbackType, *args: Any, **kwargs: Any) -> None:
        """
        Schedule a run under `name`.

        :param name: The unique name of the run.
        :param callback: The run.
        :param args: Positional arguments to be passed to the callback.
        :param kwargs: Keyword arguments to be passed to the callback.
        :return: None.
        :raises CantorLabException: If a run with the same name was already submitted.
        """
        pass

    @abstractmethod
    def collect(self) -> dict[str, Any]:
        """
        Wait for every submitted run and return their results.

        :return: The results keyed by run name, in name order.
        :raises BaseException: The first exception raised by a run, in name order.
        """
        pass
