"""Exception types shared across the package."""


class LatsumError(Exception):
    """Base class for all latsum-specific errors."""


class DependentColumnsError(LatsumError):
    """Basis columns are linearly dependent over the rationals."""


class ShapeMismatchError(LatsumError):
    """Matrix or vector shapes are incompatible with the operation."""


class AlreadyNoisyError(LatsumError):
    """Noise was requested on an instance that already carries noise."""


class InstanceParseError(LatsumError):
    """Instance file is malformed or inconsistent."""


class LengthMismatchError(LatsumError):
    """Vector length does not match the instance dimension."""


class TooLargeError(LatsumError):
    """Problem size exceeds what the brute-force oracle will attempt."""


class ReductionTimeoutError(LatsumError):
    """Lattice reduction exceeded its wall-clock budget."""
