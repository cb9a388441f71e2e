from .executor_run_service import ExecutorRunService
