"""Exception types shared across the package."""


class DomainViolation(ValueError):
    """Parameters fall outside the region where an identity is asserted."""


class AsymmetryError(ValueError):
    pass


class IllConditioned(ArithmeticError):
    pass


class ZeroParameter(ValueError):
    pass


class NotSPD(ValueError):
    pass


class NotPD(ValueError):
    pass


class DivergentProduct(ValueError):
    pass


class QuadratureUnderResolved(ArithmeticError):
    """Doubling the number of nodes moved the result by more than tolerance."""

    def __init__(self, message, coarse=None, fine=None):
        super().__init__(message)
        self.coarse = coarse
        self.fine = fine


class TruncationNotConverged(ArithmeticError):
    """The series hit max_degree while shells were still above tolerance.

    The partial :class:`~hermite2d.ks_series.SeriesResult` is kept on
    ``self.partial`` so callers can still inspect it.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConfigError(ValueError):
    pass
