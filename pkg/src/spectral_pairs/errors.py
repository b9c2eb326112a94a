"""Exception types shared across the package."""


class SpectralPairsError(Exception):
    """Base class for all package errors."""


class RingMismatchError(SpectralPairsError):
    """Operands belong to different ring instances."""


class NonMonicError(SpectralPairsError):
    """A monic polynomial or operator was required."""


class NotCoveredError(SpectralPairsError):
    """The requested (family, g, eps) combination has no known closed form."""


class ConstraintError(SpectralPairsError):
    """Family parameters violate a required algebraic constraint."""


class TruncationError(SpectralPairsError):
    """A power series was too short for the requested operation."""


class DegenerateSampleError(SpectralPairsError):
    """A sampled configuration is degenerate (zero multiplier, vanishing data)."""


class CommutingOperatorNotFound(SpectralPairsError):
    """No commuting operator of the requested order was found within the degree cap.

    This is inconclusive, not a proof of nonexistence.
    """


class UnsupportedDegreeError(SpectralPairsError):
    """Polynomial degree outside the supported range."""
