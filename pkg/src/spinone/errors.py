"""Exception types and the CLI exit code each one maps to."""


class SpinOneError(Exception):
    exit_code = 1


class ArgumentError(SpinOneError, ValueError):
    """Invalid site indices, parameters, grids or mismatched dimensions."""

    exit_code = 2


class CapacityError(SpinOneError):
    """Requested system is larger than the dense backend supports."""

    exit_code = 3


class BracketError(SpinOneError):
    """A root-finding bracket does not enclose a sign change."""

    exit_code = 4

    def __init__(self, message, lo=None, hi=None, f_lo=None, f_hi=None):
        super().__init__(message)
        self.lo, self.hi = lo, hi
        self.f_lo, self.f_hi = f_lo, f_hi


class LevelCrossingError(ArgumentError):
    """Ground level is degenerate or a crossing lies inside a stencil."""
