from pathlib import Path
from random import Random

from ..core.exceptions import (
    CantorLabException,
    ConfigException,
    NotStableException,
    PreconditionException,
    ZeroMarginalException,
)
from ..core.loggers import Logger
from ..core.settings import Settings
from ..core.utils import attributes_repr, formatted_repr
from .commands import COMMAND_RUNNERS
from .exit_codes import ExitCode
from .experiment_config import ExperimentConfig
from .outcome import SUMMARY_FILE, Outcome, to_json_text


class ExperimentRunner:
    """
    Runs experiment configs and writes their files and summary.

    **Notes:**

    -   Every random draw of an experiment comes from one generator seeded with the config's seed,
        so reruns write byte-identical files.

    -   Configuration errors end with `CONFIG`; unmet preconditions (zero marginals, unstable
        sets, exhausted depth) end with `PRECONDITION`, never with `VIOLATED`.
    """

    # Attributes for the ExperimentRunner
    __slots__ = ("__settings", "__logger")

    def __init__(self, settings: Settings | None = None) -> None:
        """
        Initialize an instance of `ExperimentRunner`.

        :param settings: The process settings. Defaults to `Settings.get()`.
        """
        self.__settings: Settings = settings or Settings.get()
        self.__logger: Logger = Logger(source=self, debug=self.__settings.debug)

    def __repr__(self) -> str:
        return formatted_repr(instance=self, info=attributes_repr(settings=self.__settings))

    def execute(self, config: ExperimentConfig) -> Outcome:
        """
        Run one experiment without writing anything.

        :param config: The experiment.
        :return: The outcome.
        """
        runner = COMMAND_RUNNERS[config.command]
        try:
            return runner(config, Random(config.seed), self.__settings)
        except ConfigException as e:
            return Outcome(config.command, ExitCode.CONFIG, (f"config: {e.errors}",))
        except (ValueError, TypeError, KeyError) as e:
            return Outcome(config.command, ExitCode.CONFIG, (f"config: {e}",))
        except (PreconditionException, ZeroMarginalException, NotStableException) as e:
            return Outcome(config.command, ExitCode.PRECONDITION, (f"precondition: {e.errors}",))
        except CantorLabException as e:
            return Outcome(config.command, ExitCode.CONFIG, (f"input: {e.errors}",))

    def run(self, config: ExperimentConfig, out: Path | None = None) -> Outcome:
        """
        Run one experiment and write its files and `summary.json` into `out`.

        :param config: The experiment.
        :param out: The output directory. Defaults to the config's `out`, else the working directory.
        :return: The outcome.
        """
        target = out or config.out or Path(".")
        result = self.execute(config)
        target.mkdir(parents=True, exist_ok=True)
        for name, content in sorted(result.files.items()):
            (target / name).write_text(content, encoding="utf-8")
        (target / SUMMARY_FILE).write_text(to_json_text(result.summary(config.seed)), encoding="utf-8")
        self.__logger.info(msg=f"{config.command}: {result.code.name.lower()} -> {target}", action="Experiment:")
        for violation in result.violations:
            self.__logger.error(msg=violation, action=f"{config.command}:")
        return result


def run(config: ExperimentConfig, out: Path | None = None, settings: Settings | None = None) -> Outcome:
    """Run one experiment and write its outputs."""
    return ExperimentRunner(settings).run(config, out)
