import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from typing_extensions import Self

from ..core.exceptions import ConfigException

COMMANDS: tuple[str, ...] = ("validate", "trace", "oscillate", "martingale", "heavy", "discard", "trim", "vv")
"""The experiment commands an `ExperimentConfig` can name."""

DEFAULT_SEED: int = 0


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    """
    One experiment: the command, its parameters and the seed of every random draw it makes.

    **Notes:**

    -   `params` holds the command's keys as in the JSON file, e.g. `measure`, `depth`, `path`.
    """

    command: str
    params: Mapping[str, Any] = field(default_factory=dict)
    seed: int = DEFAULT_SEED
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigException(f"Unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}.")
        if not isinstance(self.seed, int):
            raise ConfigException("The 'seed' key must be an integer.")

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> Self:
        """
        Build a configuration from `{"command": ..., "seed": ..., "out": ..., <params>}`.

        :param data: The JSON object.
        :return: The configuration.
        :raises ConfigException: If `command` is missing or unknown.
        """
        if not isinstance(data, Mapping):
            raise ConfigException("An experiment config must be a JSON object.")
        if "command" not in data:
            raise ConfigException("An experiment config needs the 'command' key.")
        params = {k: v for k, v in data.items() if k not in ("command", "seed", "out")}
        out = data.get("out")
        return cls(str(data["command"]), params, data.get("seed", DEFAULT_SEED), Path(out) if out else None)

    @classmethod
    def from_file(cls, path: Path) -> Self:
        """
        Read a configuration file.

        :param path: The JSON file.
        :return: The configuration.
        :raises ConfigException: If the file cannot be read or parsed.
        """
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigException(f"Cannot read experiment config {path}: {e}") from e
        return cls.from_json(data)

    def get(self, key: str, default: Any = None) -> Any:
        """Return a parameter, or `default` when absent."""
        return self.params.get(key, default)

    def require(self, key: str) -> Any:
        """
        Return a required parameter.

        :raises ConfigException: If the parameter is absent.
        """
        if key not in self.params:
            raise ConfigException(f"The {self.command} command needs the {key!r} parameter.")
        return self.params[key]
