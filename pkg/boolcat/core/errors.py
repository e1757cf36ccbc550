"""
Exception hierarchy for boolcat
"""
from typing import Optional


class BoolcatError(Exception):
    """Base class for every error raised by boolcat"""


class WordParseError(BoolcatError, ValueError):
    """Text or values do not form a word of distinct positive integers"""


class PermutationError(BoolcatError, ValueError):
    """A word whose value set is not {1..n}"""


class ClassSpecError(BoolcatError, ValueError):
    """A pattern class string or pattern set that cannot be used"""


class RelabelError(BoolcatError, ValueError):
    """Value set and permutation lengths disagree"""


class TreeCodeError(BoolcatError, ValueError):
    """Malformed 0-1-tree code"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DomainError(BoolcatError, ValueError):
    """Argument outside the open convergence interval of the generating function"""


class LimitExceededError(BoolcatError):
    """Requested size is above a configured resource limit"""

    def __init__(self, what: str, n: int, limit: int, hint: Optional[str] = None):
        message = f"{what} refused for n={n}: limit is {limit}"
        if hint:
            message = f"{message} ({hint})"
        super().__init__(message)
        self.n = n
        self.limit = limit


class PreconditionError(BoolcatError, ValueError):
    """Inputs to a combination step violate its class precondition"""


class DuplicatePreimageError(BoolcatError, AssertionError):
    """Constructive generation produced the same permutation twice"""
