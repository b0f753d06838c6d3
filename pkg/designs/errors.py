# designs/errors.py


class PermDesignError(ValueError):
    """Base class for every error raised by the designs package."""


class PermutationError(PermDesignError):
    def __init__(self, message: str, reason: str = "invalid permutation"):
        super().__init__(message)
        self.reason = reason


class PermSetError(PermDesignError):
    pass


class FieldError(PermDesignError):
    pass


class CriterionRangeError(PermDesignError):
    """A Charlier-based criterion was asked for t outside 1..floor(n/2)."""


class ClosureCapError(PermDesignError):
    pass


class SingularSystemError(PermDesignError):
    pass


class LatinSquareError(PermDesignError):
    pass
