from .run_service import RunCallbackType, RunService
