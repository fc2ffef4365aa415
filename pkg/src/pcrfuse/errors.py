"""Exception types raised by the fusion engine."""


class FusionError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyFocalSetError(FusionError):
    """A focal element with no singletons was supplied as input."""


class OutOfFrameError(FusionError):
    """A focal element references bits beyond the frame."""


class NegativeMassError(FusionError):
    """A mass value is negative (or not a number)."""


class NonUnitSumError(FusionError):
    """The masses of a source do not sum to one within tolerance."""


class AlphaOutOfRangeError(FusionError):
    """A discounting factor lies outside [0, 1]."""


class FrameMismatchError(FusionError):
    """Two operands are defined over different frames."""


class EmptySourceListError(FusionError):
    """An operation over a source list received no sources."""


class TotalConflictError(FusionError):
    """Normalization is impossible because the conflict equals one."""


class TooManySourcesError(FusionError):
    """The (expanded) source list exceeds the enumeration cap."""


class ZeroWeightError(FusionError):
    """An importance weight is not a positive integer."""


class DocumentError(ValueError):
    """An input document is malformed; the message names the offending part."""
