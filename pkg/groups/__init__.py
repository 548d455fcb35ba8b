"""
ArtinBD Groups Module
Free words, free products of cyclic groups, braids, braid actions, semidirect
products, fixed subgroups and rank-2 Artin groups.
"""

from .braids import BraidWord, parse_braid
from .errors import (BudgetExceededError, CenterViolationError, FamilyMismatchError, FlavorError,
                     GroupError, IllegalExponentError, IndexRangeError, MissingImageError,
                     NotAutomorphismError, WordParseError)
from .free_words import FreeWord, is_conjugate, parse_word
from .involutive_products import FreeProductWord, InvolutiveWord, parse_k_word
from .rank2 import AutoDescriptor, Rank2Group
from .representations import RepKind, apply, representation
from .semidirect import FlavorTag, GroupFlavor, SemidirectElement
from .symbols import Alphabet, Family, GenSym

__all__ = [
    'Alphabet', 'Family', 'GenSym',
    'FreeWord', 'is_conjugate', 'parse_word',
    'InvolutiveWord', 'FreeProductWord', 'parse_k_word',
    'BraidWord', 'parse_braid',
    'RepKind', 'representation', 'apply',
    'FlavorTag', 'GroupFlavor', 'SemidirectElement',
    'Rank2Group', 'AutoDescriptor',
    'GroupError', 'FamilyMismatchError', 'IndexRangeError', 'WordParseError',
    'MissingImageError', 'BudgetExceededError', 'FlavorError', 'IllegalExponentError',
    'NotAutomorphismError', 'CenterViolationError',
]
