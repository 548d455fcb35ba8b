"""
ArtinBD Toolkit - Fixed subgroups and conjugacy classification
License: MIT

Subgroups of K fixed by sets of standard braid generators, detection of
conjugates of powers of delta (in K) and of u0 or u_j (in F_n), and the
bounded length-lexicographic enumerators the exhaustive suites run on.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .braids import BraidWord
from .errors import BudgetExceededError, FamilyMismatchError, IndexRangeError
from .free_words import FreeWord, cyclic_reduce, is_conjugate, power_of
from .involutive_products import (FactorPartition, InvolutiveWord, block_delta, delta_word,
                                  k_conjugate, k_cyclic_reduce, syllable_decompose, x)
from .representations import Representation, RepKind, Word, apply, representation, u0_word
from .symbols import Alphabet, Family, GenSym

logger = logging.getLogger('artinbd.groups.fixed_conjugacy')


@dataclass(frozen=True)
class CutSet:
    """
    Cuts 1 <= i1 < ... < ik < n.

    The generators a_{i1}, ..., a_{ik} are removed from S; the rest form T.
    """

    n: int
    cuts: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise IndexRangeError(f"cut sets need n >= 2, got {self.n}")
        object.__setattr__(self, 'cuts', tuple(self.cuts))
        previous = 0
        for cut in self.cuts:
            if not previous < cut < self.n:
                raise IndexRangeError(f"cuts {self.cuts} must increase strictly inside 1..{self.n - 1}")
            previous = cut

    def partition(self) -> FactorPartition:
        return FactorPartition.from_cuts(self.n, self.cuts)

    def kept(self) -> List[int]:
        """Indices j with a_j in T."""
        return [j for j in range(1, self.n) if j not in self.cuts]

    @classmethod
    def all_for(cls, n: int) -> List['CutSet']:
        """Every cut set for n strands, in order of the cut bitmask."""
        result = []
        for mask in range(1 << (n - 1)):
            result.append(cls(n, tuple(j for j in range(1, n) if mask >> (j - 1) & 1)))
        return result


def fixed_gens(c: CutSet) -> List[InvolutiveWord]:
    """delta(1, i1), delta(i1+1, i2), ..., delta(ik+1, n)."""
    return [block_delta(start, end, c.n) for start, end in c.partition().blocks]


def single_fixed_gens(j: int, n: int) -> List[InvolutiveWord]:
    """Generators of the subgroup fixed by a_j: x_j x_{j+1} and the other x_i."""
    if not 1 <= j < n:
        raise IndexRangeError(f"a{j} out of range for n={n}")
    gens = [x(i, n) for i in range(1, j)]
    gens.append(InvolutiveWord(n, (j, j + 1)))
    gens.extend(x(i, n) for i in range(j + 2, n + 1))
    return gens


def is_fixed(w: Word, rep: Representation, b: BraidWord) -> bool:
    return apply(rep, b, w) == w


def fixed_by_all(w: Word, rep: Representation) -> bool:
    """Fixed by every braid, i.e. by every standard generator."""
    return all(is_fixed(w, rep, BraidWord(rep.n, ((i, 1),))) for i in range(1, rep.n))


def _is_power(w: InvolutiveWord, base: InvolutiveWord) -> bool:
    if len(w) % len(base):
        return False
    k = len(w) // len(base)
    return w == base ** k or w == base ** -k


def in_fixed_subgroup(w: InvolutiveWord, c: CutSet) -> bool:
    """
    Membership in <delta ranges of c>.

    Every syllable over the interval partition has to be a power of its
    block's delta range.
    """
    gens = fixed_gens(c)
    return all(_is_power(syllable, gens[block - 1])
               for block, syllable in syllable_decompose(w, c.partition()))


def in_single_fixed_subgroup(w: InvolutiveWord, j: int) -> bool:
    """Membership in <x_j x_{j+1}> * <x_i : i != j, j+1>."""
    n = w.n
    blocks = [(i, i) for i in range(1, j)] + [(j, j + 1)] + [(i, i) for i in range(j + 2, n + 1)]
    partition = FactorPartition(n, tuple(blocks))
    pair = InvolutiveWord(n, (j, j + 1))
    return all(_is_power(syllable, pair) for block, syllable in syllable_decompose(w, partition)
               if block == j)


def cyclic_shifts(w: InvolutiveWord) -> List[InvolutiveWord]:
    """Cyclic permutations of the cyclically reduced core of w."""
    _, core = k_cyclic_reduce(w)
    letters = core.letters
    if not letters:
        return [core]
    return [InvolutiveWord(w.n, letters[s:] + letters[:s]) for s in range(len(letters))]


def _conjugate(w1: Word, w2: Word) -> bool:
    if isinstance(w1, InvolutiveWord):
        return k_conjugate(w1, w2) is not None
    return is_conjugate(w1, w2) is not None


def invariant_under(w: Word, rep: Representation, indices: Sequence[int]) -> bool:
    """a_j(w) ~ w for every listed j."""
    return all(_conjugate(apply(rep, BraidWord(rep.n, ((j, 1),)), w), w) for j in indices)


def braid_invariant_classify(w: Word, rep: Representation) -> bool:
    """True iff a_i(w) is conjugate to w for every standard generator a_i."""
    return invariant_under(w, rep, range(1, rep.n))


def single_invariant_has_fixed_representative(w: InvolutiveWord, j: int) -> bool:
    """If a_j(w) ~ w then a shortest element of [w] is fixed by a_j."""
    rep = representation(RepKind.RHO_PLUS, w.n)
    if not invariant_under(w, rep, (j,)):
        return True
    return any(is_fixed(shift, rep, BraidWord(w.n, ((j, 1),))) for shift in cyclic_shifts(w))


def t_invariant_has_fixed_conjugate(w: InvolutiveWord, c: CutSet) -> bool:
    """If a_j(w) ~ w for every a_j in T then w is conjugate into the T-fixed subgroup."""
    if c.n != w.n:
        raise FamilyMismatchError(f"cut set for n={c.n}, word for n={w.n}")
    rep = representation(RepKind.RHO_PLUS, w.n)
    if not invariant_under(w, rep, c.kept()):
        return True
    return any(in_fixed_subgroup(shift, c) for shift in cyclic_shifts(w))


def conj_to_delta_power(w: InvolutiveWord) -> Optional[int]:
    """k with w ~ delta^k, or None."""
    _, core = k_cyclic_reduce(w)
    if core.is_identity():
        return 0
    if len(core) % w.n:
        return None
    k = len(core) // w.n
    delta = delta_word(w.n)
    if k_conjugate(core, delta ** k) is not None:
        return k
    if k_conjugate(core, delta ** -k) is not None:
        return -k
    return None


def conj_to_u0_power(w: FreeWord, n: int) -> Optional[int]:
    """k with w ~ u0^k in F_n, or None."""
    if w.alphabet is not Alphabet.U:
        raise FamilyMismatchError("u0 powers live in the u-alphabet")
    _, core = cyclic_reduce(w)
    if core.is_identity():
        return 0
    if len(core) % n:
        return None
    k = len(core) // n
    u0 = u0_word(n)
    if is_conjugate(core, u0 ** k) is not None:
        return k
    if is_conjugate(core, u0 ** -k) is not None:
        return -k
    return None


@dataclass(frozen=True)
class ConjugacyClass:
    """kind is 'u_power' (index, exponent), 'u0_power' (exponent) or 'other'."""

    kind: str
    exponent: int = 0
    index: int = 0

    def __str__(self) -> str:
        if self.kind == 'u_power':
            return f"power-of-u_j({self.index},{self.exponent})"
        if self.kind == 'u0_power':
            return f"power-of-u0({self.exponent})"
        return 'other'


def dyer_grossman_classify(w: FreeWord, n: int) -> ConjugacyClass:
    """Conjugate to a power of some u_j, to a power of u0, or neither."""
    _, core = cyclic_reduce(w)
    if core.is_identity():
        return ConjugacyClass('u0_power', 0)
    symbols = core.symbols()
    if len(symbols) == 1:
        generator = FreeWord.gen(Alphabet.U, Family.U, symbols[0].index)
        exponent = power_of(core, generator)
        if exponent is not None:
            return ConjugacyClass('u_power', exponent, symbols[0].index)
    k = conj_to_u0_power(core, n)
    if k is not None:
        return ConjugacyClass('u0_power', k)
    return ConjugacyClass('other')


# -- enumeration ----------------------------------------------------------------

class WordKind(Enum):
    K_WORDS = 'k'
    F_WORDS = 'f'
    BRAID_WORDS = 'braid'


def enumeration_size(kind: WordKind, n: int, max_length: int) -> int:
    """Number of reduced words of length <= max_length."""
    if kind is WordKind.K_WORDS:
        letters, branching = n, n - 1
    elif kind is WordKind.F_WORDS:
        letters, branching = 2 * n, 2 * n - 1
    else:
        letters, branching = 2 * (n - 1), 2 * (n - 1) - 1
    return 1 + sum(letters * branching ** (length - 1) for length in range(1, max_length + 1))


def _letters(kind: WordKind, n: int) -> List:
    if kind is WordKind.K_WORDS:
        return list(range(1, n + 1))
    if kind is WordKind.F_WORDS:
        return [(GenSym(Family.U, i), s) for i in range(1, n + 1) for s in (1, -1)]
    return [(i, s) for i in range(1, n) for s in (1, -1)]


def _cancels(kind: WordKind, last, letter) -> bool:
    if kind is WordKind.K_WORDS:
        return last == letter
    return last[0] == letter[0] and last[1] == -letter[1]


def _words_of_length(kind: WordKind, alphabet: List, length: int) -> Iterator[Tuple]:
    if length == 0:
        yield ()
        return
    for prefix in _words_of_length(kind, alphabet, length - 1):
        for letter in alphabet:
            if prefix and _cancels(kind, prefix[-1], letter):
                continue
            yield prefix + (letter,)


def enumerate_words(kind: WordKind, n: int, max_length: int,
                    budget: Optional[int] = None) -> Iterator[Union[InvolutiveWord, FreeWord, BraidWord]]:
    """
    Every reduced word of length <= max_length exactly once, length-lexicographic.

    Letter order is x1 < x2 < ... for K-words and u1 < u1^-1 < u2 < ... (a1 <
    a1^-1 < ...) for free and braid words. F-words are over u_1..u_n.

    Raises:
        BudgetExceededError: the enumeration would produce more than budget words
    """
    if max_length < 0:
        raise IndexRangeError(f"max_length must be >= 0, got {max_length}")
    size = enumeration_size(kind, n, max_length)
    if budget is not None and size > budget:
        raise BudgetExceededError(f"{size} {kind.value}-words up to length {max_length} exceed budget {budget}")
    logger.debug("enumerating %d %s-words (n=%d, max_length=%d)", size, kind.value, n, max_length)
    alphabet = _letters(kind, n)
    return _wrap(kind, n, alphabet, max_length)


def _wrap(kind: WordKind, n: int, alphabet: List, max_length: int):
    for length in range(max_length + 1):
        for letters in _words_of_length(kind, alphabet, length):
            if kind is WordKind.K_WORDS:
                yield InvolutiveWord(n, letters)
            elif kind is WordKind.F_WORDS:
                yield FreeWord(Alphabet.U, letters)
            else:
                yield BraidWord(n, letters)


def is_cyclically_reduced(w: InvolutiveWord) -> bool:
    return len(w) <= 1 or w.letters[0] != w.letters[-1]
