"""Exception types raised by the library."""


class ValidationError(ValueError):
    """Malformed partition, tableau or polynomial input."""


class EmptySetError(ValueError):
    """The addressed set of oscillating tableaux is empty."""


class UnknownFormula(KeyError):
    """A closed-form id that is not registered."""


class CoefficientCheckError(AssertionError):
    """An exact coefficient identity failed for a given (r, i) pair."""

    def __init__(self, r: int, i: int, message: str):
        super().__init__(f"(r={r}, i={i}): {message}")
        self.r = r
        self.i = i
