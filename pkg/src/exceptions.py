from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from src.schemas.table.models import TargetStatus


class TableException(Exception):
    """Base exception for binary table errors."""


class TableParsingError(TableException):
    """Exception raised when table text cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, token: Optional[int] = None):
        self.line = line
        self.token = token
        location = ""
        if line is not None:
            location = f"line {line}" + (f", token {token}" if token is not None else "") + ": "
        super().__init__(f"{location}{message}")


class TableArgumentError(TableException):
    """Exception raised when a row or column index is out of range."""


class TableReductionError(TableException):
    """Exception raised when reduction leaves no attributes."""


class TargetNotUsableError(TableException):
    """Exception raised when the target column is reducible or has an empty extent."""

    def __init__(self, status: "TargetStatus", context: Optional[str] = None):
        self.status = status
        self.context = context
        super().__init__(f"{context}: {status.explanation}" if context else status.explanation)


class DualizationException(Exception):
    """Base exception for hypergraph dualization errors."""


class OracleCapacityError(DualizationException):
    """Exception raised when the brute-force engine is given too many vertices."""


class PipelineException(Exception):
    """Base exception for run-level failures."""


class BenchmarkException(Exception):
    """Base exception for benchmark sweep errors."""


class TotalSupportMismatchError(BenchmarkException):
    """Exception raised when the two pipelines disagree on total supports."""


class ConfigurationError(Exception):
    """Exception raised when configuration is invalid."""
