import argparse
from collections.abc import Sequence
from pathlib import Path
from sys import stdout
from typing import Any

from ..core.exceptions import CantorLabException
from ..core.loggers import StdOutLogger
from ..core.settings import Settings
from .exit_codes import ExitCode
from .experiment_config import COMMANDS, DEFAULT_SEED, ExperimentConfig
from .experiment_runner import ExperimentRunner
from .plotdata import plotdata
from .suite import run_suite

# Parameter flags of each command: (flag, nargs). Values stay text; the commands parse them.
COMMAND_FLAGS: dict[str, tuple[tuple[str, str | None], ...]] = {
    "validate": (("measure", None), ("depth", None)),
    "trace": (
        ("measure", None),
        ("path", None),
        ("a2", None),
        ("depth", None),
        ("window", None),
        ("tolerance", None),
        ("additivity", "+"),
    ),
    "oscillate": (("path", None), ("a2", None), ("depth", None), ("window", None), ("tolerance", None)),
    "martingale": (
        ("measure", None),
        ("a2", None),
        ("depth", None),
        ("u", None),
        ("v", None),
        ("crossings", None),
        ("levels", "+"),
    ),
    "heavy": (
        ("measure", None),
        ("set", None),
        ("n", None),
        ("depth", None),
        ("path", None),
        ("slack", None),
        ("trials", None),
        ("levels", "+"),
    ),
    "discard": (("measure", None), ("set", None), ("depth", None), ("trials", None)),
    "trim": (
        ("measure", None),
        ("covers", "+"),
        ("epsilon", None),
        ("deltas", "+"),
        ("maxdepth", None),
        ("gamma", None),
        ("scenario", None),
        ("count", None),
        ("trials", None),
        ("cover_depth", None),
    ),
    "vv": (("measure", None), ("depth", None), ("max_k", None), ("trials", None), ("kraft_bits", None)),
}

INTEGER_PARAMS: frozenset[str] = frozenset(
    {"depth", "window", "crossings", "n", "trials", "maxdepth", "max_k", "kraft_bits", "count", "cover_depth"}
)
"""Parameters passed on as integers; heavy `levels` are integers too."""


def build_parser() -> argparse.ArgumentParser:
    """
    Build the `cantorlab` argument parser.

    :return: The parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, default=None, help="Output directory (default: working directory).")
    common.add_argument("--seed", type=int, default=None, help=f"Random seed (default: {DEFAULT_SEED}).")
    common.add_argument("--debug", action="store_true", help="Enable debug logging.")

    parser = argparse.ArgumentParser(
        prog="cantorlab", description="Exact finite-depth experiments on measures over the Cantor square."
    )
    parser.add_argument("--config", type=Path, default=None, help="Run an experiment config JSON file.")
    parser.add_argument(
        "--out", dest="config_out", type=Path, default=None, help="Output directory for --config."
    )
    parser.add_argument("--debug", dest="config_debug", action="store_true", help="Enable debug logging.")
    subparsers = parser.add_subparsers(dest="command")

    for command in COMMANDS:
        sub = subparsers.add_parser(command, parents=[common], help=f"Run the {command} experiment.")
        for name, nargs in COMMAND_FLAGS[command]:
            sub.add_argument(f"--{name.replace('_', '-')}", dest=name, nargs=nargs, default=None)

    plot = subparsers.add_parser("plotdata", help="Turn a trace CSV into plot data.")
    plot.add_argument("tracefile", type=Path)
    plot.add_argument("--out", type=Path, default=None, help="Output file (default: standard output).")

    suite = subparsers.add_parser("suite", help="Run every config of a directory.")
    suite.add_argument("configdir", type=Path)
    suite.add_argument("--out", type=Path, required=True)
    suite.add_argument("--workers", type=int, default=None)
    suite.add_argument("--debug", action="store_true", help="Enable debug logging.")
    return parser


def _param(name: str, value: Any) -> Any:
    if name in INTEGER_PARAMS:
        return int(value)
    return value


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """
    Build an experiment config from parsed command-line flags.

    :param args: The parsed arguments of an experiment command.
    :return: The config.
    """
    params: dict[str, Any] = {}
    for name, _ in COMMAND_FLAGS[args.command]:
        value = getattr(args, name)
        if value is not None:
            params[name] = _param(name, value)
    if args.command == "heavy" and "levels" in params:
        params["levels"] = [int(level) for level in params["levels"]]
    seed = DEFAULT_SEED if args.seed is None else args.seed
    return ExperimentConfig(args.command, params, seed, args.out)


def _settings(debug: bool) -> Settings:
    settings = Settings.get()
    return Settings(maxdepth=settings.maxdepth, debug=True) if debug else settings


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the `cantorlab` command line.

    :param argv: The arguments, without the program name. Defaults to `sys.argv[1:]`.
    :return: The exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings(args.config_debug or getattr(args, "debug", False))
        if args.config is not None:
            return int(ExperimentRunner(settings).run(ExperimentConfig.from_file(args.config), args.config_out).code)
        if args.command is None:
            parser.print_usage()
            return int(ExitCode.CONFIG)
        if args.command == "plotdata":
            try:
                text = args.tracefile.read_text(encoding="utf-8")
            except OSError as e:
                StdOutLogger.error(msg=f"Cannot read {args.tracefile}: {e}", source="cantorlab", action="Plotdata:")
                return int(ExitCode.CONFIG)
            data = plotdata(text)
            if args.out is None:
                stdout.write(data)
            else:
                args.out.write_text(data, encoding="utf-8")
            return int(ExitCode.OK)
        if args.command == "suite":
            return int(run_suite(args.configdir, args.out, settings, args.workers))
        return int(ExperimentRunner(settings).run(config_from_args(args)).code)
    except (CantorLabException, ValueError) as e:
        errors = e.errors if isinstance(e, CantorLabException) else str(e)
        StdOutLogger.error(msg=f"{errors}", source="cantorlab", action="Config:")
        return int(ExitCode.CONFIG)
