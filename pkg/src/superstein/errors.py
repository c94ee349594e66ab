"""Exception hierarchy shared by all modules."""


class SupersteinError(Exception):
    """Base class for all toolkit errors."""


class InputError(SupersteinError, ValueError):
    """Malformed user input: unknown builtin, bad shape string, characteristic 2."""


class PreconditionError(SupersteinError, ValueError):
    """An operation precondition does not hold, e.g. quotient by a non-subspace."""


class ConstructionError(SupersteinError, RuntimeError):
    """A build-time certification failed; the message carries a witness."""


class ResourceLimitError(SupersteinError, RuntimeError):
    """A size guard was exceeded; the message names the offending dimension."""


class AlgfileError(SupersteinError, ValueError):
    """Algebra file syntax error, with line information in the message."""


class ValidationError(SupersteinError, ValueError):
    """An algebra table failed validation; carries the full report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
