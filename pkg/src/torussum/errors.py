"""Exception taxonomy.

Every rejected precondition raises one of these, so callers can tell a
mis-sized grid from an under-resolved operator without parsing messages.
All of them are ValueError subclasses; generic argument mistakes (bad enum
member, negative order, malformed flag) raise plain ValueError.
"""


class TorusSumError(ValueError):
    """Base class for structured precondition failures."""


class SizingError(TorusSumError):
    """Grid dimensions are not powers of two >= 4, or shapes disagree."""


class SamplingError(TorusSumError):
    """A sampled value is NaN or infinite; the message names the node."""


class AliasingError(TorusSumError):
    """Requested coefficient box is too wide for the grid (2*m >= n)."""


class TruncationError(TorusSumError):
    """Partial-sum degree exceeds the stored coefficient box."""


class ResolutionError(TorusSumError):
    """Quadrature grid is too coarse for the requested kernel order."""


class CutoffError(TorusSumError):
    """Working spectral cutoff cannot hold the modulated products exactly."""


class DivergenceError(TorusSumError):
    """Norm bracketing failed to terminate within the supported range."""
