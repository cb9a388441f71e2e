from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from ..core.exceptions import ConfigException
from ..core.processing.executor import ExecutorRunService
from ..core.settings import Settings
from .exit_codes import ExitCode, worst
from .experiment_config import ExperimentConfig
from .experiment_runner import ExperimentRunner
from .outcome import SUMMARY_FILE, Outcome, to_json_text


def run_suite(
    configdir: Path, out: Path, settings: Settings | None = None, max_workers: int | None = None
) -> ExitCode:
    """
    Run every `*.json` experiment config of a directory, each into its own sub-directory of `out`.

    :param configdir: The directory of configs.
    :param out: The output directory; `summary.json` aggregates all experiments.
    :param settings: The process settings.
    :param max_workers: The worker threads used.
    :return: The worst exit code, `OK` for an empty directory.
    """
    if not configdir.is_dir():
        raise ConfigException(f"Suite directory {configdir} does not exist.")
    runner = ExperimentRunner(settings)

    def run_one(path: Path) -> tuple[ExperimentConfig | None, Outcome]:
        try:
            config = ExperimentConfig.from_file(path)
        except ConfigException as e:
            return None, Outcome("unknown", ExitCode.CONFIG, (f"config: {e.errors}",))
        return config, runner.run(config, out / path.stem)

    with ExecutorRunService(ThreadPoolExecutor(max_workers=max_workers)) as service:
        for path in sorted(configdir.glob("*.json")):
            service.submit(path.stem, run_one, path)
        results: dict[str, tuple[ExperimentConfig | None, Outcome]] = service.collect()

    experiments: list[dict[str, Any]] = []
    violations: list[str] = []
    for name, (config, result) in results.items():
        experiments.append(
            {"name": name, "command": result.command, "code": int(result.code), "seed": config.seed if config else None}
        )
        violations += [f"{name}: {v}" for v in result.violations]
    code = worst(result.code for _, result in results.values())
    summary = {"command": "suite", "ok": code == ExitCode.OK, "violations": violations, "experiments": experiments}
    out.mkdir(parents=True, exist_ok=True)
    (out / SUMMARY_FILE).write_text(to_json_text(summary), encoding="utf-8")
    return code
