from .callable_utils import get_callable_name, validate_callable
from .rational_utils import (
    ceil_log2,
    dyadic_ceil,
    dyadic_floor,
    floor_log2,
    format_rational,
    overlap,
    parse_rational,
)
from .repr_utils import attributes_repr, formatted_repr, hex_id_repr, summarized_repr
