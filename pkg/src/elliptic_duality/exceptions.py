# exceptions.py


class EllipticDualityError(Exception):
    """Base class for every error raised by the package."""
    pass


class DegenerateLattice(EllipticDualityError):
    """The two periods are linearly dependent over the reals."""
    pass


class DeltaInLattice(EllipticDualityError):
    """A small multiple of the shift step lies (numerically) on the period lattice."""
    pass


class SelfTestFailed(EllipticDualityError):
    """Quasi-periodicity or quasi-period constants failed the construction self-test."""
    pass


class ScalarOverflow(EllipticDualityError):
    """A value left the finite range of the working precision."""
    pass


class WrongCase(EllipticDualityError):
    """The operation is not defined for the bracket case of the context."""
    pass


class BadIndex(EllipticDualityError):
    """An index argument is outside its allowed range."""
    pass


class NearSingularity(EllipticDualityError):
    """A denominator fell below the singularity tolerance."""

    def __init__(self, message: str, magnitude: float = 0.0, scale: float = 0.0):
        super().__init__(message)
        self.magnitude = magnitude
        self.scale = scale


class UnbalancedParams(EllipticDualityError):
    """Parameters violate the balancing condition of the identity being evaluated."""
    pass


class NonTerminating(EllipticDualityError):
    """A V-series was requested without a termination witness."""
    pass


class SizeLimit(EllipticDualityError):
    """An enumeration would exceed the configured size cap."""
    pass


class SamplerExhausted(EllipticDualityError):
    """The sampler could not find a generic point within its rejection budget."""
    pass


class ConfigError(EllipticDualityError):
    """Invalid trial, sampler or command-line configuration."""
    pass


class ReportFormatError(EllipticDualityError):
    """A report or fixture document could not be parsed."""
    pass


class LockAcquisitionError(EllipticDualityError):
    """Custom exception for lock acquisition failures."""
    pass
