"""
Utilities package initialization.
Logging, exceptions, summation, parallel map and input helpers.
"""

from .logger import setup_logger, log_with_context
from .exceptions import (
    ThetaMomentsError,
    DomainError,
    PoleError,
    ComputationError,
    PrecisionError,
    ValidationError,
    InvalidInputError,
    ConfigError,
    to_exit_code,
)
from .summation import two_sum, compensated_sum, chunked_sum
from .parallel import parallel_map, split_chunks
from .validators import (
    validate_shifts,
    validate_prime_range,
    validate_grid,
)
from .helpers import (
    parse_float_list,
    parse_prime_range,
    linear_grid,
    log_plus,
    format_number,
    format_exponents,
    utc_timestamp,
)

__all__ = [
    # Logger
    "setup_logger",
    "log_with_context",

    # Exceptions
    "ThetaMomentsError",
    "DomainError",
    "PoleError",
    "ComputationError",
    "PrecisionError",
    "ValidationError",
    "InvalidInputError",
    "ConfigError",
    "to_exit_code",

    # Numerics
    "two_sum",
    "compensated_sum",
    "chunked_sum",
    "parallel_map",
    "split_chunks",

    # Validators
    "validate_shifts",
    "validate_prime_range",
    "validate_grid",

    # Helpers
    "parse_float_list",
    "parse_prime_range",
    "linear_grid",
    "log_plus",
    "format_number",
    "format_exponents",
    "utc_timestamp",
]
