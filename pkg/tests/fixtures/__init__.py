from .callable_fixtures import CallableMock, DummyCallable, dummy_function
from .measure_fixtures import MeasureFixtures
