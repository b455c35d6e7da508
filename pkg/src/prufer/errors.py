"""Exception hierarchy shared by every module of the package."""


class PruferError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(PruferError, ValueError):
    """Input data does not describe a valid object (zero denominator, bad JSON...)."""


class DomainError(PruferError, ValueError):
    """An operation was called outside its mathematical domain (division by zero...)."""


class EmptyIdealError(DomainError):
    """A generator list made only of zeros was given where a nonzero ideal is needed."""


class DimensionError(PruferError, ValueError):
    """Matrix shapes or ideal chains do not fit together."""


class NotInvertibleError(PruferError):
    """A pseudo-matrix or ideal is not invertible.

    ``ideal`` carries the offending determinant ideal when one is known.
    """

    def __init__(self, message, ideal=None):
        super().__init__(message)
        self.ideal = ideal


class PreconditionError(PruferError, ValueError):
    """A documented precondition of an algorithm does not hold."""


class InvariantViolation(PruferError, AssertionError):
    """An internal invariant failed. This always indicates a bug."""


class ValidationError(PruferError, ValueError):
    """A pseudo-matrix violates one of its inclusions ``a_ij e_j <= h_i``."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position
