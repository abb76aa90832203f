"""Exception types shared across the package."""


class SuperlaseError(Exception):
    """Base class for all package errors."""


class DomainError(SuperlaseError, ValueError):
    """An input violates a documented precondition or invariant."""


class ConfigError(SuperlaseError, ValueError):
    """A config file is unreadable or carries bad keys/values."""


class SingularPointError(SuperlaseError, ArithmeticError):
    """gamma*v = Delta_c*u: the critical coupling diverges at this detuning."""


class NoMinimumError(SuperlaseError, ArithmeticError):
    """A detuning interval contained only singular points."""


class BracketError(SuperlaseError, ValueError):
    """A root bracket does not enclose a sign change.

    Carries the endpoint function values for diagnostics.
    """

    def __init__(self, message, f_lo=None, f_hi=None):
        super().__init__(message)
        self.f_lo = f_lo
        self.f_hi = f_hi


class StiffnessError(SuperlaseError, ArithmeticError):
    """Step size underflowed the 1e-18 s floor; carries the last good time."""

    def __init__(self, message, last_time):
        super().__init__(message)
        self.last_time = last_time


class DivergenceError(SuperlaseError, ArithmeticError):
    """NaN/Inf appeared in the integrated state."""

    def __init__(self, message, last_time):
        super().__init__(message)
        self.last_time = last_time
