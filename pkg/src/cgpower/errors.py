"""Exception types raised across the package."""


class CgpError(ValueError):
    """Base class for all errors raised by cgpower."""


class NotHermitianError(CgpError):
    """Matrix violates the Hermitian symmetry tolerance."""


class NoConvergenceError(CgpError):
    """Eigensolver failed to converge."""


class NotUnitaryError(CgpError):
    """Matrix violates the unitarity tolerance."""


class InvalidDistributionError(CgpError):
    """Probability vector has negative entries or does not sum to one."""


class DimensionMismatchError(CgpError):
    """Operands have incompatible dimensions."""


class InvalidParameterError(CgpError):
    """Parameter outside its admissible range."""


class WrongChannelVariantError(CgpError):
    """Operation requires a different channel variant."""


class ParseError(CgpError):
    """Malformed matrix or channel description."""
