"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid parameters: bad grid sizes, exponents out of range, unknown names."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain (diagonal points,
    evaluation inside an excluded interval, supports too wide for the grid)."""


class RegularityError(ConfigurationError):
    """The requested computation needs more smoothness than the wavelet has."""


class ConventionMismatchError(RuntimeError):
    """Two independent realizations of the same operator disagree beyond
    tolerance; raised by build-time cross-validation checks."""


class FitError(RuntimeError):
    """An envelope or least-squares fit failed its verification pass."""
