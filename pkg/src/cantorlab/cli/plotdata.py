import csv
import io
from fractions import Fraction

from ..conditional import Verdict
from ..core.exceptions import ConfigException
from ..core.utils import parse_rational

TRACE_HEADER: list[str] = ["depth", "lo", "hi", "verdict"]


def _number(value: Fraction) -> str:
    return f"{float(value):.12g}"


def plotdata(trace_csv: str) -> str:
    """
    Turn a trace CSV into whitespace-separated `depth mid lo hi` rows with `# band lo hi` annotations.

    :param trace_csv: The trace CSV text.
    :return: The plot data; empty for a trace without rows.
    :raises ConfigException: If the CSV is malformed.
    """
    rows = [row for row in csv.reader(io.StringIO(trace_csv)) if row]
    if not rows:
        return ""
    if rows[0] != TRACE_HEADER:
        raise ConfigException(f"A trace file must start with the header {','.join(TRACE_HEADER)}.")
    if len(rows) == 1:
        return ""
    lines = ["# depth mid lo hi"]
    verdict = Verdict("undecided")
    for row in rows[1:]:
        if len(row) != len(TRACE_HEADER):
            raise ConfigException(f"Malformed trace row {','.join(row)!r}.")
        try:
            depth = int(row[0])
        except ValueError as e:
            raise ConfigException(f"Malformed trace depth {row[0]!r}.") from e
        lo, hi = parse_rational(row[1]), parse_rational(row[2])
        verdict = Verdict.parse(row[3])
        lines.append(f"{depth} {_number((lo + hi) / 2)} {_number(lo)} {_number(hi)}")
    lines += [f"# band {_number(band.lo)} {_number(band.hi)}" for band in verdict.bands]
    return "\n".join(lines) + "\n"
