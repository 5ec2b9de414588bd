"""Exceptions raised by raptorbound."""


class RaptorBoundError(Exception):
    """Base exception for raptorbound errors."""

    def __init__(self, message: str, original_error: Exception | None = None):
        self.original_error = original_error
        super().__init__(message)


class DomainError(RaptorBoundError, ValueError):
    """An argument lies outside the domain of a mathematical operation."""


class SpecError(RaptorBoundError):
    """An experiment specification is invalid or incomplete."""


class VerificationError(RaptorBoundError):
    """One or more cross-oracle checks failed."""

    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__("Verification failed: " + ", ".join(failed))
