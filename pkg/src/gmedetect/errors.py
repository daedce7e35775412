"""Exception hierarchy shared by the numerical core and the CLI."""


class GMEError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(GMEError, ValueError):
    """Non-finite entries, unnormalized vectors, malformed input."""


class DimensionError(GMEError, ValueError):
    """Array shape does not match the declared subsystem dimensions."""


class InvalidStateError(GMEError, ValueError):
    """A density-matrix invariant (Hermitian, unit trace, PSD) is violated."""


class UnsupportedDimsError(GMEError, ValueError):
    """The criteria only apply to d x d x d systems."""


class DegenerateDimsError(GMEError, ValueError):
    """d = 1 leaves the concurrence bound undefined."""


class ParameterError(GMEError, ValueError):
    """Family parameters outside their valid range."""


class NoCrossingError(GMEError, ValueError):
    """Bisection endpoints have identical verdicts."""
