"""Exception hierarchy shared by the library and the CLI exit codes."""


class ApproximationError(Exception):
    """Base class for all errors raised by this package."""


class CurveValidationError(ApproximationError, ValueError):
    """Curve or problem data violates an invariant (CLI exit code 2)."""


class InfeasibleContactError(ApproximationError, ValueError):
    """Requested contact order cannot be realized at the target degree (exit code 3)."""


class SingularSystemError(ApproximationError, ArithmeticError):
    """Normal equations are numerically singular (exit code 4)."""
