"""Exception hierarchy shared across the package."""


class PrimeFreeError(Exception):
    """Base class for all errors raised by primefree."""


class DomainError(PrimeFreeError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(PrimeFreeError, RuntimeError):
    """A configured resource limit (digits, time, modulus size) was exceeded."""


class DigitBudgetExceeded(ResourceLimitError):
    """A term would have more decimal digits than the configured budget allows."""

    def __init__(self, message: str, limiting_n: int | None = None):
        super().__init__(message)
        self.limiting_n = limiting_n


class CertificateFormatError(PrimeFreeError, ValueError):
    """A serialized certificate is not structurally well formed."""


class InvariantViolation(PrimeFreeError, RuntimeError):
    """An internal mathematical invariant failed; indicates a bug or bad input."""
