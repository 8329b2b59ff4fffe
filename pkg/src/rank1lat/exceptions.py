"""Exception hierarchy shared by all modules."""


class LatticeError(Exception):
    """Base class for errors raised by rank1lat."""


class NotInvertible(LatticeError, ValueError):
    pass


class DimensionMismatch(LatticeError, ValueError):
    pass


class SingularBasis(LatticeError, ValueError):
    pass


class InvalidGenerator(LatticeError, ValueError):
    pass


class InvalidAxes(LatticeError, ValueError):
    pass


class CapExceeded(LatticeError):
    pass


class ParamOutOfRange(LatticeError, ValueError):
    pass


class CorruptRecord(LatticeError):
    pass


class IoFailure(LatticeError, OSError):
    pass
