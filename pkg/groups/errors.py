"""
ArtinBD Toolkit - Error hierarchy
License: MIT

Exceptions raised by the group engine. Every error is a ValueError so callers
that only care about "bad input" can catch one type.
"""

from typing import Optional


class GroupError(ValueError):
    """Base class for all group engine errors."""


class FamilyMismatchError(GroupError):
    """Words from different alphabets (or the wrong fiber family) were combined."""


class IndexRangeError(GroupError):
    """A generator index, rank or range bound is out of range."""


class WordParseError(GroupError):
    """Word text could not be parsed."""

    def __init__(self, message: str, column: int, token: Optional[str] = None):
        self.column = column
        self.token = token
        super().__init__(f"{message} (column {column})")


class MissingImageError(GroupError):
    """An endomorphism has no image for a generator that occurs in the word."""


class BudgetExceededError(GroupError):
    """An enumeration or search exceeded its configured budget."""


class FlavorError(GroupError):
    """Semidirect flavor mismatch, unsupported flavor or rank."""


class IllegalExponentError(GroupError):
    """A free-product exponent is not legal for its factor order."""


class NotAutomorphismError(GroupError):
    """The given images do not define an automorphism."""


class CenterViolationError(NotAutomorphismError):
    """The image of the center generator is not c or c^-1."""
