"""Exception hierarchy."""
from __future__ import annotations



class DephlabError(Exception):
    """Base class for all package errors."""


class DomainError(DephlabError, ValueError):
    """An argument lies outside the domain of an operation."""


class ConvergenceError(DephlabError, RuntimeError):
    """An iterative numerical method failed to reach its tolerance."""


class InvalidStateError(DephlabError, ValueError):
    """A generated density matrix violates positivity or normalisation."""


class ConfigError(DephlabError, ValueError):
    """A configuration document failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
