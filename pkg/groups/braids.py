"""
ArtinBD Toolkit - Braid words
License: MIT

Syntactic braid words in the standard generators a_i (alpha_i), the length
homomorphism, the permutation image and the named braids zeta, beta0 and the
chain beta. Braid equality is not decided here: see representations.braid_equal.
"""

import random
from dataclasses import dataclass, field
from functools import reduce as fold
from typing import Iterable, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from .errors import FamilyMismatchError, IndexRangeError
from .symbols import expand_tokens, tokenize

BraidLetter = Tuple[int, int]


def _cancel(letters: Iterable[BraidLetter]) -> Tuple[BraidLetter, ...]:
    stack: List[BraidLetter] = []
    for index, sign in letters:
        if stack and stack[-1] == (index, -sign):
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """Word in a_1..a_{n-1} with adjacent inverse pairs cancelled."""

    n: int
    letters: Tuple[BraidLetter, ...] = field(default=())

    def __post_init__(self):
        if self.n < 2:
            raise IndexRangeError(f"braids need n >= 2 strands, got {self.n}")
        for index, sign in self.letters:
            if not 1 <= index < self.n:
                raise IndexRangeError(f"a{index} out of range for n={self.n}")
            if sign not in (1, -1):
                raise IndexRangeError(f"braid letter sign must be +1 or -1, got {sign}")
        object.__setattr__(self, 'letters', _cancel(self.letters))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: 'BraidWord') -> 'BraidWord':
        if other.n != self.n:
            raise FamilyMismatchError(f"braids on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def __invert__(self) -> 'BraidWord':
        return BraidWord(self.n, tuple((i, -s) for i, s in reversed(self.letters)))

    def __pow__(self, exponent: int) -> 'BraidWord':
        base = self if exponent >= 0 else ~self
        return BraidWord(self.n, base.letters * abs(exponent))

    def __str__(self) -> str:
        return braid_text(self)


def generator(i: int, n: int, sign: int = 1) -> BraidWord:
    return BraidWord(n, ((i, sign),))


def identity(n: int) -> BraidWord:
    return BraidWord(n)


def length_hom(b: BraidWord) -> int:
    """Sum of exponents: every standard generator goes to 1."""
    return sum(sign for _, sign in b.letters)


def perm_image(b: BraidWord) -> Permutation:
    """
    Image in S_n with a_i -> (i, i+1).

    Composition follows the left action: perm_image(b1 * b2) applies b2 first.
    """
    transpositions = [Permutation(i - 1, i, size=b.n) for i, _ in reversed(b.letters)]
    return fold(lambda p, q: p * q, transpositions, Permutation(list(range(b.n))))


def perm_images(p: Permutation) -> Tuple[int, ...]:
    """1-based image array of a permutation."""
    return tuple(j + 1 for j in p.array_form)


def zeta(n: int) -> BraidWord:
    """(a1 a2 ... a_{n-1})^n, generator of the center of B_n."""
    if n < 2:
        raise IndexRangeError(f"zeta needs n >= 2, got {n}")
    return BraidWord(n, tuple((i, 1) for i in range(1, n)) * n)


def beta0() -> BraidWord:
    """(a1 a2 a3)^2 in B_4."""
    return BraidWord(4, ((1, 1), (2, 1), (3, 1)) * 2)


def beta_chain(n: int) -> BraidWord:
    """a1 a2 ... a_{n-2}."""
    if n < 3:
        raise IndexRangeError(f"beta chain needs n >= 3, got {n}")
    return BraidWord(n, tuple((i, 1) for i in range(1, n - 1)))


def random_braid(n: int, length: int, rng: random.Random) -> BraidWord:
    letters = [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)]
    return BraidWord(n, tuple(letters))


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse braid text such as "a1 a2^-1 a1"."""
    tokens = tokenize(text, {'a': None}, True)
    return BraidWord(n, tuple((token.index, sign) for token, sign in expand_tokens(tokens)))


def braid_text(b: BraidWord) -> str:
    if b.is_identity():
        return 'e'
    return ' '.join(f"a{i}" if s > 0 else f"a{i}^-1" for i, s in b.letters)


def concat(braids: Sequence[BraidWord]) -> BraidWord:
    n = braids[0].n
    return fold(lambda p, q: p * q, braids, identity(n))
