"""Reproducible, file-emitting experiments over the CantorLab modules."""

from .commands import COMMAND_RUNNERS, CommandRunner
from .exit_codes import ExitCode, worst
from .experiment_config import COMMANDS, DEFAULT_SEED, ExperimentConfig
from .experiment_runner import ExperimentRunner, run
from .main import build_parser, config_from_args, main
from .outcome import SUMMARY_FILE, Outcome, outcome, to_csv_text, to_json_text
from .plotdata import plotdata
from .suite import run_suite

__all__ = [
    "COMMANDS",
    "COMMAND_RUNNERS",
    "CommandRunner",
    "DEFAULT_SEED",
    "ExitCode",
    "ExperimentConfig",
    "ExperimentRunner",
    "Outcome",
    "SUMMARY_FILE",
    "build_parser",
    "config_from_args",
    "main",
    "outcome",
    "plotdata",
    "run",
    "run_suite",
    "to_csv_text",
    "to_json_text",
    "worst",
]
