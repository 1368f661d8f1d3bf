"""Exception hierarchy shared by all modules."""


class NorthcottError(Exception):
    """Base class for every error raised by this package."""


class DomainError(NorthcottError, ValueError):
    """Argument outside the domain where an operation is defined."""


class PoleError(DomainError):
    """Argument sits on (or within the guard radius of) a pole."""


class UnsupportedRegionError(DomainError):
    """Point lies in a region where no verdict is available."""


class ConditionViolatedError(DomainError):
    """A required inequality does not hold at the given point."""


class WindowError(DomainError):
    """Subinterval is not contained in the monotonicity window of its branch."""


class CircleError(DomainError):
    """Evaluation point lies inside the excluded circle |z - 0.5| < 1.1."""


class CoveringError(NorthcottError):
    """Closed-form circles fail to cover the strip they are meant to cover."""


class NotFoundError(NorthcottError):
    """A search ran out of range without certifying anything."""


class ConvergenceError(NorthcottError):
    """A truncated series or product cannot reach the requested accuracy."""
