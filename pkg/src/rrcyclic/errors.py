"""Exception hierarchy shared by every module of the package."""


class RRCyclicError(Exception):
    """Base class for all package errors."""


class UnsupportedFieldError(RRCyclicError, ValueError):
    pass


class FieldMismatchError(RRCyclicError, ValueError):
    pass


class InvalidLengthError(RRCyclicError, ValueError):
    pass


class InvalidGeneratorError(RRCyclicError, ValueError):
    pass


class InvalidParametersError(RRCyclicError, ValueError):
    pass


class NotApplicableError(RRCyclicError, ValueError):
    pass


class InternalConsistencyError(RRCyclicError, RuntimeError):
    pass


class ResourceError(RRCyclicError):
    """A computation would exceed its enumeration or search budget.

    ``partial`` carries whatever was established before giving up (for the
    distance search, a ``DistanceResult`` lower bound), or ``None``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
