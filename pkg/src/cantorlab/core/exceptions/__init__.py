from .cantorlab_exception import CantorLabException
from .domain_exceptions import (
    ConfigException,
    DepthExhaustedException,
    InsufficientTermsException,
    KraftViolationException,
    NotStableException,
    PreconditionException,
    ZeroMarginalException,
)
