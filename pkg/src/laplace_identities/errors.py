"""Exception types raised across the package."""


class PoleError(ValueError):
    """Argument sits on (or within the guard radius of) a gamma-function pole."""


class DomainError(ValueError):
    """Argument outside the region where the requested quantity is defined."""


class InvalidInput(ValueError):
    """A non-finite number where a finite one is required (argument or integrand value)."""


class EvaluationError(ValueError):
    """A transform returned a non-finite value on an inversion node."""


class NonConvergence(RuntimeError):
    """Quadrature hit its refinement limit before meeting the tolerance.

    The partial result is kept on ``result`` so callers can still inspect it.
    """

    def __init__(self, message, result=None, term=None):
        super().__init__(message)
        self.result = result
        self.term = term


class UnknownIdentity(KeyError):
    pass


class UnknownPair(KeyError):
    pass


class SelfConsistencyError(RuntimeError):
    """A catalog entry's forward transform disagrees with its stated transform."""


class BranchWarning(UserWarning):
    """A principal branch was applied to a parameter outside the usual half-plane."""
