import sys
from logging import DEBUG, ERROR, INFO, WARNING, Formatter, Logger, StreamHandler, getLogger
from typing import TextIO

from ..constants import StdOutColors


class _StdOutHandler(StreamHandler):  # type: ignore[type-arg]
    """A stream handler writing to whatever `sys.stdout` is when a record is emitted."""

    @property  # type: ignore[override]
    def stream(self) -> TextIO:
        return sys.stdout

    @stream.setter
    def stream(self, value: TextIO) -> None:
        pass


class StdOutLogger:
    """A logging interface that writes coloured CantorLab log lines to the standard output."""

    class Handler:
        """Inner class building the handlers and the message layout."""

        __LEVEL_COLORS: dict[int, str] = {
            INFO: StdOutColors.GREEN,
            DEBUG: StdOutColors.PURPLE,
            WARNING: StdOutColors.YELLOW,
            ERROR: StdOutColors.RED,
        }

        @classmethod
        def get_color_by_level(cls, level: int) -> str:
            """
            Return the color code associated with the specified log level.

            :param level: The log level for which to retrieve the color code.
            :return: The color code associated with the log level.
            """
            return cls.__LEVEL_COLORS.get(level, StdOutColors.DEFAULT)

        @classmethod
        def get_stream_handler_by_level(cls, level: int) -> StreamHandler:  # type: ignore[type-arg]
            """
            Return a stream handler configured with the specified log level.

            :param level: The log level to set for the stream handler.
            :return: The configured stream handler.
            """
            level_color: str = cls.get_color_by_level(level=level)
            logger_format: str = (
                f"{level_color}[CantorLab] {StdOutColors.DEFAULT}%(process)05d {level_color}• "
                f"{StdOutColors.DEFAULT}%(asctime)s {level_color}%(levelname)8s {level_color}%(message)s"
            )
            stream_handler = _StdOutHandler()
            stream_handler.setFormatter(fmt=Formatter(logger_format, datefmt="%Y-%m-%d %I:%M:%S %p"))
            return stream_handler

        @classmethod
        def build_log(cls, level: int, msg: str, source: str | None = None, action: str | None = None) -> str:
            """
            Build a log message string with the specified log level, message, source, and action.

            :param level: The log level of the message.
            :param msg: The log message.
            :param source: The source of the log message. Defaults to None.
            :param action: The action or step associated with the log. Defaults to None.
            :return: The formatted log message string.
            """
            level_color: str = cls.get_color_by_level(level=level)
            label: str = (action if action.endswith(" ") else action + " ") if action else "Message: "
            return (
                f"{StdOutColors.DEFAULT}[{source if source else 'StdOutLogger(ClassReference)'}]"
                f"{level_color} {label}{StdOutColors.DEFAULT}{msg}"
            )

    # Configure loggers for each logging level
    __error_logger: Logger = getLogger(name="cantorlab.error")
    __error_logger.setLevel(level=ERROR)

    __warning_logger: Logger = getLogger(name="cantorlab.warning")
    __warning_logger.setLevel(level=WARNING)

    __info_logger: Logger = getLogger(name="cantorlab.info")
    __info_logger.setLevel(level=INFO)

    __debug_logger: Logger = getLogger(name="cantorlab.debug")
    __debug_logger.setLevel(level=DEBUG)

    # Add stream handlers to each logger
    for __logger in (__error_logger, __warning_logger, __info_logger, __debug_logger):
        if not __logger.handlers:
            __logger.addHandler(hdlr=Handler.get_stream_handler_by_level(level=__logger.level))
    del __logger

    __loggers: dict[int, Logger] = {
        ERROR: __error_logger,
        WARNING: __warning_logger,
        INFO: __info_logger,
        DEBUG: __debug_logger,
    }

    @classmethod
    def log(cls, level: int, msg: str, source: str | None = None, action: str | None = None) -> None:
        """
        Log a message at the given level.

        :param level: One of the `logging` level constants.
        :param msg: The message to be logged.
        :param source: The source of the log message. Defaults to None.
        :param action: The action or step associated with the log. Defaults to None.
        :return: None.
        """
        cls.__loggers[level].log(level, cls.Handler.build_log(level=level, msg=msg, source=source, action=action))

    @classmethod
    def error(cls, msg: str, source: str | None = None, action: str | None = None) -> None:
        """Log an ERROR level message."""
        cls.log(ERROR, msg=msg, source=source, action=action)

    @classmethod
    def warning(cls, msg: str, source: str | None = None, action: str | None = None) -> None:
        """Log a WARNING level message."""
        cls.log(WARNING, msg=msg, source=source, action=action)

    @classmethod
    def info(cls, msg: str, source: str | None = None, action: str | None = None) -> None:
        """Log an INFO level message."""
        cls.log(INFO, msg=msg, source=source, action=action)

    @classmethod
    def debug(cls, msg: str, source: str | None = None, action: str | None = None) -> None:
        """Log a DEBUG level message."""
        cls.log(DEBUG, msg=msg, source=source, action=action)
