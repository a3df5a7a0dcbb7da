"""Exception types shared across the package.

The CLI maps these onto exit codes: argument/usage problems exit 2,
computational precondition failures exit 3.
"""


class LrlabError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(LrlabError, ValueError):
    """An argument is outside the operation's domain."""


class UnsupportedCaseError(InvalidArgumentError):
    """The requested case tag does not support this operation."""


class PreconditionError(LrlabError, ValueError):
    """A computational precondition (cutoffs, rigor requirements) is not met."""


class ResourceLimitError(LrlabError, RuntimeError):
    """The request exceeds the configured desk-scale limits."""


class ConsistencyError(LrlabError, RuntimeError):
    """Two internally computed routes disagree beyond their combined budgets."""
