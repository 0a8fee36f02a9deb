"""
Custom exception classes for thetamoments.
"""

from typing import Optional, Any, Dict

from src.config.constants import EXIT_CODES


class ThetaMomentsError(Exception):
    """Base exception for thetamoments"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)


# ==================== DOMAIN EXCEPTIONS ====================

class DomainError(ThetaMomentsError):
    """Argument outside the mathematical domain of an operation"""

    def __init__(self, message: str, constraint: Optional[str] = None, **kwargs):
        details = kwargs.get("details", {})
        if constraint:
            details["constraint"] = constraint
        kwargs["details"] = details
        if "error_code" not in kwargs:
            kwargs["error_code"] = "DOMAIN_ERROR"
        super().__init__(message, **kwargs)


class PoleError(DomainError):
    """Evaluation at a pole"""

    def __init__(self, message: str = "Evaluation at a pole (s = 1)"):
        super().__init__(message, error_code="POLE")


# ==================== NUMERICAL EXCEPTIONS ====================

class ComputationError(ThetaMomentsError):
    """Numerical computation failed"""

    def __init__(self, message: str, **kwargs):
        if "error_code" not in kwargs:
            kwargs["error_code"] = "COMPUTATION_ERROR"
        super().__init__(message, **kwargs)


class PrecisionError(ComputationError):
    """Requested tolerance unreachable at working precision"""

    def __init__(self, message: str, best_effort: Any = None, achieved: Optional[float] = None):
        details = {}
        if achieved is not None:
            details["achieved_error"] = achieved
        super().__init__(message, error_code="PRECISION", details=details)
        self.best_effort = best_effort


# ==================== VALIDATION EXCEPTIONS ====================

class ValidationError(ThetaMomentsError):
    """Data validation error"""

    def __init__(self, message: str, field: Optional[str] = None, **kwargs):
        details = kwargs.get("details", {})
        if field:
            details["field"] = field
        kwargs["details"] = details
        if "error_code" not in kwargs:
            kwargs["error_code"] = "VALIDATION_ERROR"
        super().__init__(message, **kwargs)


class InvalidInputError(ValidationError):
    """Invalid command-line input"""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message, field=field)


class ConfigError(ValidationError):
    """Malformed or invalid configuration file"""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        details: Dict[str, Any] = {}
        if line is not None:
            details["line"] = line
            message = f"line {line}: {message}"
        if path:
            details["path"] = path
        super().__init__(message, details=details, error_code="CONFIG_ERROR")
        self.line = line


# ==================== EXIT CODE CONVERTER ====================

def to_exit_code(exc: BaseException) -> int:
    """
    Convert an exception to the CLI exit code.

    Args:
        exc: Exception raised while running a subcommand

    Returns:
        2 for usage, validation, config and domain errors; 1 otherwise
    """
    exit_code_map = {
        "USAGE_ERROR": EXIT_CODES["USAGE_ERROR"],
        "VALIDATION_ERROR": EXIT_CODES["USAGE_ERROR"],
        "CONFIG_ERROR": EXIT_CODES["USAGE_ERROR"],
        "DOMAIN_ERROR": EXIT_CODES["USAGE_ERROR"],
        "POLE": EXIT_CODES["COMPUTATION_ERROR"],
        "PRECISION": EXIT_CODES["COMPUTATION_ERROR"],
        "COMPUTATION_ERROR": EXIT_CODES["COMPUTATION_ERROR"],
    }

    if not isinstance(exc, ThetaMomentsError):
        return EXIT_CODES["COMPUTATION_ERROR"]

    return exit_code_map.get(exc.error_code, EXIT_CODES["COMPUTATION_ERROR"])


__all__ = [
    "ThetaMomentsError",
    "DomainError",
    "PoleError",
    "ComputationError",
    "PrecisionError",
    "ValidationError",
    "InvalidInputError",
    "ConfigError",
    "to_exit_code",
]
