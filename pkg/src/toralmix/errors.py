"""Exception types shared across the package."""


class ToralmixError(Exception):
    """Base class for all validation and computation errors."""


class NotSquare(ToralmixError):
    pass


class NotUnimodular(ToralmixError):
    pass


class NotHyperbolic(ToralmixError):
    pass


class DegreeOutOfRange(ToralmixError):
    pass


class IllConditioned(ToralmixError):
    """Rank determination ambiguous at the requested tolerance."""


class BoundViolated(ToralmixError):
    """A proved spectral bound failed numerically; signals a bug, never a valid state."""


class CapExceeded(ToralmixError):
    pass


class InsufficientData(ToralmixError):
    """Fewer than three usable points for a decay-rate fit."""
