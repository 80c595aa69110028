"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point lies outside the support or domain it was given for."""


class UnsupportedOrderError(ValueError):
    """A polynomial order or argument is beyond the supported range."""


class BracketError(ValueError):
    """Root search interval does not bracket a sign change."""


class NumericalError(ArithmeticError):
    """A numerical procedure failed to produce a trustworthy result."""


class EvaluationError(NumericalError):
    """An integrand returned NaN."""

    def __init__(self, abscissa):
        super().__init__(f"integrand returned NaN at x={abscissa!r}")
        self.abscissa = abscissa


class TopologyChangeError(ValueError):
    """A point set no longer matches the domain structure at a given time."""

    def __init__(self, message, time, domain=None):
        super().__init__(message)
        self.time = time
        self.domain = domain
