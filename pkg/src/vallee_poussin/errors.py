"""Exception hierarchy for the package."""


class ValleePoussinError(Exception):
    """Base class for all errors raised by this package."""


class ArgumentError(ValleePoussinError, ValueError):
    """An argument violates an operation's precondition."""


class OrderExceededError(ArgumentError):
    """A partial sum was requested beyond the available coefficient order."""


class EvaluationError(ValleePoussinError, ArithmeticError):
    """A user function returned a non-finite value."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


class ConvergenceError(ValleePoussinError, RuntimeError):
    """An iterative or adaptive procedure failed to reach its tolerance."""

    def __init__(self, message, achieved=None, diagnostics=None):
        super().__init__(message)
        self.achieved = achieved
        self.diagnostics = diagnostics or {}


class RootNotFoundError(ValleePoussinError, RuntimeError):
    """No sign change was located inside the expected interval."""


class ClassMembershipError(ValleePoussinError, ValueError):
    """A corpus member does not belong to the requested function class."""


class ConfigError(ArgumentError):
    """A run configuration is malformed; ``field`` holds the offending path."""

    def __init__(self, message, field=None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
