"""
Custom exceptions for ltiband.
"""

from typing import Any


class LtibandError(Exception):
    """Base exception for ltiband."""

    pass


class InvalidArgumentError(LtibandError, ValueError):
    """An operation was called outside its preconditions."""

    pass


class ConfigError(LtibandError):
    """Run configuration is invalid."""

    def __init__(self, message: str, fields: list[tuple[str, str]] | None = None):
        super().__init__(message)
        self.fields = fields or []


class CellExpressionError(ConfigError):
    """Spike-train expression could not be parsed."""

    pass


class ConsistencyError(LtibandError):
    """An internal self-check disagreed with itself."""

    pass


class ConvergenceError(ConsistencyError):
    """Iterative eigensolver did not converge."""

    def __init__(self, message: str, sweeps: int, off_norm: float):
        super().__init__(message)
        self.sweeps = sweeps
        self.off_norm = off_norm


class EngineError(LtibandError):
    """An engine failed while evaluating a specific k-point."""

    def __init__(self, message: str, k: float, cell_size: int):
        super().__init__(f"{message} (M={cell_size}, k={k!r})")
        self.k = k
        self.cell_size = cell_size


class VerificationError(LtibandError):
    """A verification report did not pass."""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class OutputError(LtibandError):
    """Artifact could not be written."""

    pass
