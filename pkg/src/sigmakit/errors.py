"""Exception hierarchy.

Two error families matter to callers (and to the CLI exit codes):
precondition violations (``DomainError``, exit code 1) and numerical
failures such as non-convergent series or root searches
(``NumericError``, exit code 2).
"""


class SigmaKitError(Exception):
    """Base class for all library errors."""


class DomainError(SigmaKitError, ValueError):
    """An argument violates a documented precondition."""


class NotInOmegaError(DomainError):
    """The leading odd coefficient vanishes, so the invariants are undefined."""


class IdentityNotSatisfiedError(DomainError):
    """Taylor data is inconsistent with every function family the
    classifier knows; the input does not satisfy the four-point identity."""


class NumericError(SigmaKitError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy target."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class ConvergenceError(NumericError):
    """A series, product, or iteration hit its term cap before converging."""
