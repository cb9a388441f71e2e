class StdOutColors:
    """ANSI escape codes used to colour log lines."""

    DEFAULT: str = "\033[0m"
    PURPLE: str = "\033[35m"
    YELLOW: str = "\033[33m"
    RED: str = "\033[31m"
    GREEN: str = "\033[32m"
