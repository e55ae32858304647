"""Exception types shared by every boostosc module."""


class OscillatorError(Exception):
    """Base class for all boostosc errors."""


class DomainError(OscillatorError, ValueError):
    """An argument is outside the operation's admissible domain."""


class TruncationError(OscillatorError):
    """A series could not reach the requested tail tolerance within the mode ceiling."""


class EvaluationError(OscillatorError):
    """An integrand returned a non-finite value; ``node`` holds the offending point."""

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class ResolutionError(OscillatorError):
    """An oscillatory phase is too fast for the quadrature rule in use."""
