"""
ArtinBD Toolkit - Generator symbols and word text grammar
License: MIT

Generator symbols live in a closed registry of families. Families are grouped
into alphabets; a word always belongs to exactly one alphabet, and the text
grammar of a word is driven by its alphabet.

Grammar: tokens separated by whitespace, each token a family prefix, an index
(omitted for unindexed alphabets) and an optional exponent "^k". The identity
is spelled "e".
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, NamedTuple, Tuple

from .errors import IndexRangeError, WordParseError


class Family(Enum):
    """Closed registry of generator families."""

    U = 'u'
    V = 'v'
    G = 'g'
    X = 'x'
    Y = 'y'
    A = 'a'
    B = 'b'
    S = 's'
    T = 't'
    ALPHA = 'alpha'
    BETA = 'beta'
    DELTA = 'delta'


FAMILY_ORDER: Dict[Family, int] = {family: position for position, family in enumerate(Family)}


@dataclass(frozen=True)
class GenSym:
    """A generator symbol: family tag plus positive index."""

    family: Family
    index: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise IndexRangeError(f"generator index must be >= 1, got {self.index}")

    def sort_key(self) -> Tuple[int, int]:
        return FAMILY_ORDER[self.family], self.index


Letter = Tuple[GenSym, int]


def letter_key(letter: Letter) -> Tuple[int, int, int]:
    """Lexicographic key on (family, index, sign) used for tie-breaking."""
    symbol, sign = letter
    return FAMILY_ORDER[symbol.family], symbol.index, sign


class Alphabet(Enum):
    """
    Alphabets a word can be written in.

    Each value is (name, prefix table, indexed). The prefix table maps text
    prefixes to families; the first prefix listed for a family is the one used
    when rendering.
    """

    U = ('u', (('u', Family.U),), True)
    V = ('v', (('v', Family.V),), True)
    G = ('g', (('g', Family.G),), True)
    XY = ('xy', (('x', Family.X), ('y', Family.Y)), False)
    ST = ('st', (('s', Family.S), ('t', Family.T)), False)
    AB = ('ab', (('a', Family.A), ('b', Family.B)), False)
    STD = ('std', (('alpha', Family.ALPHA), ('beta', Family.BETA),
                   ('a', Family.ALPHA), ('b', Family.BETA)), False)
    PRES_B = ('presB', (('b', Family.BETA),), True)
    PRES_D = ('presD', (('d', Family.DELTA),), True)

    def __init__(self, label: str, prefixes: Tuple[Tuple[str, Family], ...], indexed: bool):
        self.label = label
        self.prefixes = dict(prefixes)
        self.indexed = indexed
        self.families = tuple(dict.fromkeys(family for _, family in prefixes))
        self.render_prefix = {}
        for prefix, family in prefixes:
            self.render_prefix.setdefault(family, prefix)

    def coordinate(self, symbol: GenSym) -> int:
        """1-based abelianization coordinate of a symbol in this alphabet."""
        if self.indexed:
            return symbol.index
        return self.families.index(symbol.family) + 1

    def render(self, letter: Letter) -> str:
        symbol, sign = letter
        token = self.render_prefix[symbol.family]
        if self.indexed:
            token += str(symbol.index)
        return token if sign > 0 else token + '^-1'

    @classmethod
    def from_label(cls, label: str) -> 'Alphabet':
        for alphabet in cls:
            if alphabet.label == label:
                return alphabet
        raise WordParseError(f"unknown word family '{label}'", 1, label)


IDENTITY_TOKEN = 'e'
TOKEN_PATTERN = re.compile(r'^([A-Za-z]+?)(\d*)(?:\^(-?\d+))?$')


class Token(NamedTuple):
    prefix: str
    index: int
    exponent: int
    column: int
    text: str


def tokenize(text: str, prefixes: Dict[str, object], indexed: bool) -> List[Token]:
    """
    Split word text into tokens.

    Args:
        text: Word text such as "u1 u2^-1 u1"
        prefixes: Allowed text prefixes (keys are checked, values ignored)
        indexed: Whether tokens carry an index

    Returns:
        Tokens in order; the identity token "e" contributes nothing
    """
    tokens: List[Token] = []
    for match in re.finditer(r'\S+', text):
        raw = match.group(0)
        column = match.start() + 1
        if raw == IDENTITY_TOKEN:
            continue
        parsed = _split_token(raw, prefixes)
        if parsed is None:
            raise WordParseError(f"cannot parse token '{raw}'", column, raw)
        prefix, digits, exponent = parsed
        if indexed:
            if not digits:
                raise WordParseError(f"token '{raw}' needs an index", column, raw)
            index = int(digits)
            if index < 1:
                raise WordParseError(f"index must be >= 1 in '{raw}'", column, raw)
        else:
            if digits not in ('', '1'):
                raise WordParseError(f"token '{raw}' takes no index", column, raw)
            index = 1
        tokens.append(Token(prefix, index, int(exponent) if exponent else 1, column, raw))
    return tokens


def _split_token(raw: str, prefixes: Dict[str, object]):
    match = TOKEN_PATTERN.match(raw)
    if match and match.group(1) in prefixes:
        return match.group(1), match.group(2), match.group(3)
    # Lazy prefix matching can stop early on multi-letter prefixes like "alpha".
    for prefix in sorted(prefixes, key=len, reverse=True):
        if raw.startswith(prefix):
            rest = re.match(r'^(\d*)(?:\^(-?\d+))?$', raw[len(prefix):])
            if rest:
                return prefix, rest.group(1), rest.group(2)
    return None


def expand_tokens(tokens: List[Token]) -> List[Tuple[Token, int]]:
    """Expand exponents into unit steps: each entry is (token, sign)."""
    steps: List[Tuple[Token, int]] = []
    for token in tokens:
        sign = 1 if token.exponent > 0 else -1
        steps.extend((token, sign) for _ in range(abs(token.exponent)))
    return steps
