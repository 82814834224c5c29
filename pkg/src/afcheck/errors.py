"""Exception types shared across the toolkit."""


class AfcheckError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(AfcheckError):
    """Ragged tables, out-of-range indices, or structurally invalid input."""


class InvalidParameterError(AfcheckError):
    """A constructor parameter outside its admissible range."""


class InvalidElementError(AfcheckError):
    """An element rank outside the carrier."""


class IncompatibleStructuresError(AfcheckError):
    """Two structures that must share a carrier or ambient algebra do not."""


class ResourceLimitError(AfcheckError):
    """An enumeration or closure exceeded its configured size cap."""


class UnsupportedInstanceError(AfcheckError):
    """The operation needs oracle data this instance does not provide."""


class PreconditionViolationError(AfcheckError):
    """The caller passed data violating a documented precondition."""
