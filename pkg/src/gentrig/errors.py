"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation failed to meet its accuracy target."""


class ToleranceError(RuntimeError):
    """Quadrature could not certify the requested tolerance.

    Carries the best estimate obtained so far in ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
