from concurrent.futures import Executor, Future
from concurrent.futures import wait as wait_for
from threading import Lock
from types import TracebackType
from typing import Any

from typing_extensions import Self, override

from ...exceptions import CantorLabException
from ...utils import attributes_repr, formatted_repr
from ..run_service import RunCallbackType, RunService


class ExecutorRunService(RunService):
    """
    A run service backed by a `concurrent.futures.Executor`.

    **Notes:**

    -   It can work with either a `ThreadPoolExecutor` or a `ProcessPoolExecutor`. With a process
        pool, runs and their arguments must be picklable.

    -   `collect()` may be called any number of times while the executor is alive; leaving a `with`
        block shuts the executor down and re-raises the first failed run.
    """

    @staticmethod
    def _execute(callback: RunCallbackType, args: tuple[Any, ...], kwargs: dict[str, Any]) -> Any:
        return callback(*args, **kwargs)

    # Attributes for the ExecutorRunService.
    __slots__ = ("__executor", "__futures", "__thread_lock")

    def __init__(self, executor: Executor) -> None:
        """
        Initialize an instance of `ExecutorRunService`.

        :param executor: The executor the runs are submitted to.
        :return: None.
        :raises CantorLabException: If the executor is not provided or is not an instance of `Executor`.
        """
        if executor is None or not isinstance(executor, Executor):
            raise CantorLabException("The 'executor' argument must be an instance of Executor.")

        self.__executor: Executor = executor
        self.__futures: dict[str, Future[Any]] = {}
        self.__thread_lock: Lock = Lock()

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(executor=self.__executor, runs=len(self.__futures)))

    @override
    def submit(self, name: str, callback: RunCallbackType, *args: Any, **kwargs: Any) -> None:
        with self.__thread_lock:
            if name in self.__futures:
                raise CantorLabException(f"A run named {name!r} was already submitted.")
            self.__futures[name] = self.__executor.submit(self.__class__._execute, callback, args, kwargs)

    @override
    def collect(self) -> dict[str, Any]:
        with self.__thread_lock:
            futures = dict(sorted(self.__futures.items()))
        wait_for(futures.values())
        return {name: future.result() for name, future in futures.items()}

    def shutdown(self, wait: bool = True, cancel_futures: bool = False) -> None:
        """
        Shut down the executor and release any resources it is using.

        :param wait: A boolean indicating whether to wait for the pending runs to complete.
        :param cancel_futures: A boolean indicating whether to cancel any pending runs.
        :return: None.
        :raises BaseException: The first exception raised by a run, in name order, once all have finished.
        """
        self.__executor.shutdown(wait=wait, cancel_futures=cancel_futures)
        if not wait:
            return
        with self.__thread_lock:
            futures = [future for _, future in sorted(self.__futures.items())]
        for future in futures:
            error = None if future.cancelled() else future.exception()
            if error is not None:
                raise error

    def __enter__(self) -> Self:
        return self

    def __exit__(
        self, exc_type: type[BaseException] | None, exc_val: BaseException | None, exc_tb: TracebackType | None
    ) -> None:
        """
        Shut the executor down on leaving the context, without masking an exception already in flight.

        :param exc_type: The exception type, if any.
        :param exc_val: The exception value, if any.
        :param exc_tb: The traceback information, if any.
        :return: None.
        """
        if exc_type is None:
            self.shutdown(wait=True, cancel_futures=False)
        else:
            self.__executor.shutdown(wait=True, cancel_futures=True)
