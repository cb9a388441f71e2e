import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .exit_codes import ExitCode

SUMMARY_FILE: str = "summary.json"


def to_json_text(data: Any) -> str:
    """Serialise deterministically: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_csv_text(rows: list[list[str]]) -> str:
    """Serialise rows as CSV with `\\n` line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


@dataclass(frozen=True, slots=True)
class Outcome:
    """The exit code, the violations and the output files of one experiment."""

    command: str
    code: ExitCode
    violations: tuple[str, ...] = ()
    files: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Whether the experiment ended with `OK`."""
        return self.code == ExitCode.OK

    def summary(self, seed: int) -> dict[str, Any]:
        """Return `{command, ok, violations, seed, code}`."""
        return {
            "command": self.command,
            "ok": self.ok,
            "violations": list(self.violations),
            "seed": seed,
            "code": int(self.code),
        }


def outcome(
    command: str,
    violations: list[str],
    files: dict[str, str],
    unmet: list[str] | None = None,
) -> Outcome:
    """
    Build an outcome: `VIOLATED` if anything was violated, else `PRECONDITION` if a precondition was unmet.

    :param command: The command name.
    :param violations: The violated bounds.
    :param files: The output files by name.
    :param unmet: The unmet preconditions.
    :return: The outcome.
    """
    unmet = unmet or []
    code = ExitCode.VIOLATED if violations else ExitCode.PRECONDITION if unmet else ExitCode.OK
    return Outcome(command, code, tuple(violations + unmet), files)
