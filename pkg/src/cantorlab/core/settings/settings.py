from os import environ
from sys import gettrace
from threading import Lock

from typing_extensions import Self

from ..exceptions import ConfigException
from ..loggers import StdOutLogger
from ..utils import attributes_repr, formatted_repr


class Settings:
    """
    Process-wide knobs resolved once from the environment.

    **Notes:**

    -   `CANTORLAB_MAXDEPTH` caps every depth request made through `clamp_depth`.

    -   `CANTORLAB_DEBUG` forces debug logging on (`1`, `true`, `yes`) or off (`0`, `false`, `no`).
        When unset, debug mode follows whether a tracer is attached.
    """

    MAXDEPTH_VAR: str = "CANTORLAB_MAXDEPTH"
    DEBUG_VAR: str = "CANTORLAB_DEBUG"

    __instance: "Settings | None" = None
    __thread_lock: Lock = Lock()

    # Attributes for the Settings
    __slots__ = ("__maxdepth", "__debug")

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> Self:
        """
        Build the settings from an environment mapping.

        :param env: The mapping to read. Defaults to `os.environ`.
        :return: The resolved settings.
        :raises ConfigException: If a variable holds an unparsable value.
        """
        source = environ if env is None else env

        maxdepth: int | None = None
        raw_maxdepth = source.get(cls.MAXDEPTH_VAR, "").strip()
        if raw_maxdepth:
            try:
                maxdepth = int(raw_maxdepth)
            except ValueError as e:
                raise ConfigException(f"{cls.MAXDEPTH_VAR} must be an integer, got {raw_maxdepth!r}.") from e
            if maxdepth < 0:
                raise ConfigException(f"{cls.MAXDEPTH_VAR} must be non-negative, got {maxdepth}.")

        debug: bool = gettrace() is not None
        raw_debug = source.get(cls.DEBUG_VAR, "").strip().lower()
        if raw_debug in ("1", "true", "yes"):
            debug = True
        elif raw_debug in ("0", "false", "no"):
            debug = False
        elif raw_debug:
            raise ConfigException(f"{cls.DEBUG_VAR} must be a boolean flag, got {raw_debug!r}.")

        return cls(maxdepth=maxdepth, debug=debug)

    @classmethod
    def get(cls) -> "Settings":
        """
        Return the process-wide settings, resolving them from `os.environ` on first use.

        :return: The shared settings instance.
        """
        with cls.__thread_lock:
            if cls.__instance is None:
                cls.__instance = cls.from_env()
            return cls.__instance

    @classmethod
    def reset(cls) -> None:
        """
        Forget the cached settings so the next `get` re-reads the environment.

        :return: None.
        """
        with cls.__thread_lock:
            cls.__instance = None

    def __init__(self, maxdepth: int | None = None, debug: bool = False) -> None:
        """
        Initialize an instance of `Settings`.

        :param maxdepth: The global depth cap, or `None` for no cap.
        :param debug: Whether debug logging is enabled.
        """
        self.__maxdepth: int | None = maxdepth
        self.__debug: bool = debug

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(maxdepth=self.__maxdepth, debug=self.__debug))

    @property
    def maxdepth(self) -> int | None:
        """The global depth cap, or `None` when uncapped."""
        return self.__maxdepth

    @property
    def debug(self) -> bool:
        """Whether debug logging is enabled."""
        return self.__debug

    def clamp_depth(self, depth: int) -> int:
        """
        Clamp a requested depth to the global cap.

        :param depth: The requested depth.
        :return: The requested depth, or the cap when the request exceeds it.
        """
        if self.__maxdepth is not None and depth > self.__maxdepth:
            StdOutLogger.warning(
                msg=f"Depth {depth} clamped to {self.MAXDEPTH_VAR}={self.__maxdepth}.",
                source="Settings",
                action="Clamp:",
            )
            return self.__maxdepth
        return depth
