"""
ArtinBD Toolkit - Free group words
License: MIT

Exact arithmetic on freely reduced words: reduction, cyclic reduction,
conjugacy, abelianization, powers and endomorphisms.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import FamilyMismatchError, GroupError, IndexRangeError, MissingImageError
from .symbols import Alphabet, Family, GenSym, Letter, expand_tokens, letter_key, tokenize

logger = logging.getLogger('artinbd.groups.free_words')


def _free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for symbol, sign in letters:
        if stack and stack[-1][0] == symbol and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((symbol, sign))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """
    Freely reduced word in one alphabet.

    Every construction reduces, so two FreeWords are equal exactly when they
    represent the same free group element.
    """

    alphabet: Alphabet
    letters: Tuple[Letter, ...] = field(default=())

    def __post_init__(self):
        for symbol, sign in self.letters:
            if symbol.family not in self.alphabet.families:
                raise FamilyMismatchError(
                    f"generator {symbol.family.value}{symbol.index} is not in alphabet {self.alphabet.label}"
                )
            if sign not in (1, -1):
                raise GroupError(f"letter sign must be +1 or -1, got {sign}")
        object.__setattr__(self, 'letters', _free_reduce(self.letters))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> 'FreeWord':
        return cls(alphabet)

    @classmethod
    def gen(cls, alphabet: Alphabet, family: Family, index: int = 1, sign: int = 1) -> 'FreeWord':
        return cls(alphabet, ((GenSym(family, index), sign),))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: 'FreeWord') -> 'FreeWord':
        return multiply(self, other)

    def __invert__(self) -> 'FreeWord':
        return invert(self)

    def __pow__(self, exponent: int) -> 'FreeWord':
        base = self if exponent >= 0 else invert(self)
        return FreeWord(self.alphabet, base.letters * abs(exponent))

    def __str__(self) -> str:
        return word_text(self)

    def symbols(self) -> List[GenSym]:
        return sorted({symbol for symbol, _ in self.letters}, key=GenSym.sort_key)


@dataclass(frozen=True)
class AbelianVector:
    """Class of a word in the abelianization Z^rank."""

    rank: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.rank:
            raise IndexRangeError(f"vector has {len(self.coords)} coordinates, rank is {self.rank}")

    def __add__(self, other: 'AbelianVector') -> 'AbelianVector':
        if other.rank != self.rank:
            raise IndexRangeError("abelian vectors of different rank")
        total = np.add(self.coords, other.coords)
        return AbelianVector(self.rank, tuple(int(c) for c in total))


def reduce(raw: Sequence[Letter], alphabet: Alphabet) -> FreeWord:
    """Free reduction of a raw letter sequence."""
    return FreeWord(alphabet, tuple(raw))


def _check_same(w1: FreeWord, w2: FreeWord):
    if w1.alphabet is not w2.alphabet:
        raise FamilyMismatchError(
            f"cannot combine words over {w1.alphabet.label} and {w2.alphabet.label}"
        )


def multiply(w1: FreeWord, w2: FreeWord) -> FreeWord:
    _check_same(w1, w2)
    return FreeWord(w1.alphabet, w1.letters + w2.letters)


def invert(w: FreeWord) -> FreeWord:
    return FreeWord(w.alphabet, tuple((symbol, -sign) for symbol, sign in reversed(w.letters)))


def _invert_letters(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    return tuple((symbol, -sign) for symbol, sign in reversed(letters))


def cyclic_reduce(w: FreeWord) -> Tuple[FreeWord, FreeWord]:
    """
    Split w as conjugator * core * conjugator^-1 with core cyclically reduced.

    Returns:
        (conjugator, core)
    """
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return FreeWord(w.alphabet, letters[:i]), FreeWord(w.alphabet, letters[i:j + 1])


def _rotations(core: Tuple, target: Tuple) -> List[int]:
    if len(core) != len(target):
        return []
    if not core:
        return [0]
    doubled = core + core
    return [s for s in range(len(core)) if doubled[s:s + len(core)] == target]


def is_conjugate(w1: FreeWord, w2: FreeWord) -> Optional[FreeWord]:
    """
    Decide conjugacy of two free group words.

    Returns:
        Witness c with c * w1 * c^-1 == w2, or None when not conjugate
    """
    _check_same(w1, w2)
    p1, k1 = cyclic_reduce(w1)
    p2, k2 = cyclic_reduce(w2)
    shifts = _rotations(k1.letters, k2.letters)
    if not shifts:
        return None
    shift = shifts[0]
    # k1 = A B and k2 = B A, so k2 = A^-1 k1 A = B k1 B^-1.
    head = FreeWord(w1.alphabet, k1.letters[:shift])
    tail = FreeWord(w1.alphabet, k1.letters[shift:])
    candidates = [p2 * invert(head) * invert(p1), p2 * tail * invert(p1)]
    return min(candidates, key=lambda c: (len(c), [letter_key(l) for l in c.letters]))


def abelianize(w: FreeWord, rank: int) -> AbelianVector:
    """Signed generator counts; coordinate i counts generator i."""
    coords = np.zeros(rank, dtype=np.int64)
    for symbol, sign in w.letters:
        position = w.alphabet.coordinate(symbol)
        if position > rank:
            raise IndexRangeError(f"generator index {position} exceeds rank {rank}")
        coords[position - 1] += sign
    return AbelianVector(rank, tuple(int(c) for c in coords))


def power_of(w: FreeWord, base: FreeWord) -> Optional[int]:
    """Exponent k with w == base^k, or None."""
    _check_same(w, base)
    if base.is_identity():
        raise GroupError("base of a power must be nontrivial")
    if w.is_identity():
        return 0
    prefix, core = cyclic_reduce(base)
    inner = invert(prefix) * w * prefix
    if len(inner) % len(core):
        return None
    k = len(inner) // len(core)
    if inner == core ** k:
        return k
    if inner == core ** -k:
        return -k
    return None


def apply_endomorphism(w: FreeWord, images: Mapping[GenSym, FreeWord],
                       target: Optional[Alphabet] = None) -> FreeWord:
    """
    Substitute generator images into w.

    Args:
        w: Source word
        images: Image of each generator occurring in w
        target: Alphabet of the result (defaults to the images' alphabet)

    Returns:
        Reduced image word
    """
    if target is None:
        target = next(iter(images.values())).alphabet if images else w.alphabet
    raw: List[Letter] = []
    for symbol, sign in w.letters:
        image = images.get(symbol)
        if image is None:
            raise MissingImageError(
                f"no image for {symbol.family.value}{symbol.index}"
            )
        if image.alphabet is not target:
            raise FamilyMismatchError("generator images use different alphabets")
        raw.extend(image.letters if sign > 0 else _invert_letters(image.letters))
    return FreeWord(target, tuple(raw))


def match_axis_form(w: FreeWord) -> Optional[Tuple[int, int, int]]:
    """
    Match w against y^k x^eps y^l in the free group on x, y.

    Returns:
        (k, eps, l) or None if w does not have that shape
    """
    if w.alphabet is not Alphabet.XY:
        raise FamilyMismatchError("axis form needs a word in x, y")
    x_positions = [i for i, (symbol, _) in enumerate(w.letters) if symbol.family is Family.X]
    if len(x_positions) != 1:
        return None
    pivot = x_positions[0]
    k = sum(sign for _, sign in w.letters[:pivot])
    l = sum(sign for _, sign in w.letters[pivot + 1:])
    return k, w.letters[pivot][1], l


def lemma_fourth_eval(w: FreeWord) -> Tuple[FreeWord, bool]:
    """
    Evaluate w(x, xy) * w(y, xy) in the free group on x, y.

    Returns:
        (product, product is trivial)
    """
    if w.alphabet is not Alphabet.ST:
        raise FamilyMismatchError("expected a word in s, t")
    x = FreeWord.gen(Alphabet.XY, Family.X)
    y = FreeWord.gen(Alphabet.XY, Family.Y)
    s, t = GenSym(Family.S), GenSym(Family.T)
    first = apply_endomorphism(w, {s: x, t: x * y}, Alphabet.XY)
    second = apply_endomorphism(w, {s: y, t: x * y}, Alphabet.XY)
    product = first * second
    return product, product.is_identity()


def parse_word(text: str, alphabet: Alphabet) -> FreeWord:
    """Parse word text in the given alphabet."""
    tokens = tokenize(text, alphabet.prefixes, alphabet.indexed)
    raw = [(GenSym(alphabet.prefixes[token.prefix], token.index), sign)
           for token, sign in expand_tokens(tokens)]
    return FreeWord(alphabet, tuple(raw))


def word_text(w: FreeWord) -> str:
    if w.is_identity():
        return 'e'
    return ' '.join(w.alphabet.render(letter) for letter in w.letters)


def generators(alphabet: Alphabet, rank: int) -> List[FreeWord]:
    """The free generators of an indexed alphabet up to the given rank."""
    family = alphabet.families[0]
    return [FreeWord.gen(alphabet, family, i) for i in range(1, rank + 1)]
