"""Exception hierarchy shared by all modules."""


class ProjRangeError(Exception):
    """Base class for every error raised by projrange."""


class DimensionMismatch(ProjRangeError, ValueError):
    pass


class NotHermitian(ProjRangeError, ValueError):
    pass


class EmptyHull(ProjRangeError, ValueError):
    pass


class EmptySpectrum(ProjRangeError, ValueError):
    pass


class OutOfDomain(ProjRangeError, ValueError):
    pass


class BlockResidualExceeded(ProjRangeError, ArithmeticError):
    pass


class SpectrumWithoutZero(ProjRangeError, ValueError):
    """A prescribed spectrum must contain 0 unless it is exactly {1}."""


class DimensionBudgetExceeded(ProjRangeError, ValueError):
    pass


class InsufficientSampling(ProjRangeError, ValueError):
    pass


class ZeroInitialVector(ProjRangeError, ValueError):
    pass


class IndexOutOfRange(ProjRangeError, IndexError):
    pass


class PreconditionError(ProjRangeError, ValueError):
    pass


class ConsistencyError(ProjRangeError, ArithmeticError):
    """Two independent computations of the same quantity disagree."""
