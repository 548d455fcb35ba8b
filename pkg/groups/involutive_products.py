"""
ArtinBD Toolkit - Free products of cyclic groups
License: MIT

Arithmetic in K, the free product of n copies of C2 generated by involutions
x_1..x_n, and in free products of cyclic groups such as C2*Cm and Ck*Z.
Also holds the parity map kappa, the delta words and the embeddings of the
free group of rank n-1 into K through the v- and g-bases.
"""

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import FamilyMismatchError, IllegalExponentError, IndexRangeError, WordParseError
from .free_words import FreeWord
from .symbols import Alphabet, Family, GenSym, expand_tokens, tokenize

logger = logging.getLogger('artinbd.groups.involutive_products')

INFINITE = math.inf
FACTOR_NAMES = 'uvw'


def _k_reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class InvolutiveWord:
    """Reduced word in K; letters are the indices of the x_i."""

    n: int
    letters: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise IndexRangeError(f"K needs at least one factor, got n={self.n}")
        for letter in self.letters:
            if not 1 <= letter <= self.n:
                raise IndexRangeError(f"letter x{letter} out of range for n={self.n}")
        object.__setattr__(self, 'letters', _k_reduce_letters(self.letters))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: 'InvolutiveWord') -> 'InvolutiveWord':
        if other.n != self.n:
            raise FamilyMismatchError(f"K-words for n={self.n} and n={other.n}")
        return InvolutiveWord(self.n, self.letters + other.letters)

    def __invert__(self) -> 'InvolutiveWord':
        return InvolutiveWord(self.n, tuple(reversed(self.letters)))

    def __pow__(self, exponent: int) -> 'InvolutiveWord':
        base = self if exponent >= 0 else ~self
        return InvolutiveWord(self.n, base.letters * abs(exponent))

    def __str__(self) -> str:
        return k_text(self)


def k_reduce(raw: Sequence[int], n: int) -> InvolutiveWord:
    return InvolutiveWord(n, tuple(raw))


def x(i: int, n: int) -> InvolutiveWord:
    return InvolutiveWord(n, (i,))


def k_cyclic_reduce(w: InvolutiveWord) -> Tuple[InvolutiveWord, InvolutiveWord]:
    """Split w as conjugator * core * conjugator^-1 with core cyclically reduced."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == letters[j]:
        i += 1
        j -= 1
    return InvolutiveWord(w.n, letters[:i]), InvolutiveWord(w.n, letters[i:j + 1])


def _shifts(core: Tuple, target: Tuple) -> List[int]:
    if len(core) != len(target):
        return []
    if not core:
        return [0]
    doubled = core + core
    return [s for s in range(len(core)) if doubled[s:s + len(core)] == target]


def k_conjugate(w1: InvolutiveWord, w2: InvolutiveWord) -> Optional[InvolutiveWord]:
    """
    Conjugacy in K.

    Returns:
        Witness c with c * w1 * c^-1 == w2, or None
    """
    if w1.n != w2.n:
        raise FamilyMismatchError(f"K-words for n={w1.n} and n={w2.n}")
    p1, k1 = k_cyclic_reduce(w1)
    p2, k2 = k_cyclic_reduce(w2)
    shifts = _shifts(k1.letters, k2.letters)
    if not shifts:
        return None
    shift = shifts[0]
    head = InvolutiveWord(w1.n, k1.letters[:shift])
    tail = InvolutiveWord(w1.n, k1.letters[shift:])
    candidates = [p2 * ~head * ~p1, p2 * tail * ~p1]
    return min(candidates, key=lambda c: (len(c), c.letters))


def kappa(w: InvolutiveWord) -> int:
    """Parity of the reduced length; a homomorphism K -> C2."""
    return len(w.letters) % 2


def delta_word(n: int) -> InvolutiveWord:
    """delta = x1 x2 ... xn."""
    if n < 1:
        raise IndexRangeError(f"delta needs n >= 1, got {n}")
    return InvolutiveWord(n, tuple(range(1, n + 1)))


def delta_range(i: int, j: int, n: int) -> InvolutiveWord:
    """delta(i, j) = x_i x_{i+1} ... x_j for 1 <= i < j <= n."""
    if not 1 <= i < j <= n:
        raise IndexRangeError(f"delta range needs 1 <= i < j <= n, got ({i}, {j}, {n})")
    return InvolutiveWord(n, tuple(range(i, j + 1)))


def block_delta(start: int, end: int, n: int) -> InvolutiveWord:
    """delta(start, end) allowing a single-letter block (start == end)."""
    if start == end:
        return x(start, n)
    return delta_range(start, end, n)


def _check_fiber(w: FreeWord, alphabet: Alphabet, n: int):
    if w.alphabet is not alphabet:
        raise FamilyMismatchError(f"expected a {alphabet.label}-word, got {w.alphabet.label}")
    for symbol, _ in w.letters:
        if symbol.index > n - 1:
            raise IndexRangeError(f"{alphabet.label}{symbol.index} out of range for n={n}")


def embed_v(w: FreeWord, n: int) -> InvolutiveWord:
    """v_i -> x1 x_{i+1}."""
    _check_fiber(w, Alphabet.V, n)
    raw: List[int] = []
    for symbol, sign in w.letters:
        pair = (1, symbol.index + 1)
        raw.extend(pair if sign > 0 else reversed(pair))
    return InvolutiveWord(n, tuple(raw))


def embed_g(w: FreeWord, n: int) -> InvolutiveWord:
    """g_i -> x_i x_{i+1}."""
    _check_fiber(w, Alphabet.G, n)
    raw: List[int] = []
    for symbol, sign in w.letters:
        pair = (symbol.index, symbol.index + 1)
        raw.extend(pair if sign > 0 else reversed(pair))
    return InvolutiveWord(n, tuple(raw))


def express_in_g(w: InvolutiveWord) -> Optional[FreeWord]:
    """
    Rewrite an even-parity K-word in the g-basis.

    Letter pairs are processed left to right with x_a x_b = g_a ... g_{b-1}
    for a < b and x_a x_b = g_{a-1}^-1 ... g_b^-1 for a > b.

    Returns:
        g-word, or None when kappa(w) = 1
    """
    if kappa(w):
        return None
    raw = []
    letters = w.letters
    for position in range(0, len(letters), 2):
        a, b = letters[position], letters[position + 1]
        if a < b:
            raw.extend((GenSym(Family.G, i), 1) for i in range(a, b))
        else:
            raw.extend((GenSym(Family.G, i), -1) for i in range(a - 1, b - 1, -1))
    return FreeWord(Alphabet.G, tuple(raw))


def basis_change_v_g(w: FreeWord) -> FreeWord:
    """
    Change between the v- and g-bases of F_{n-1}.

    v_i = g_1 g_2 ... g_i, and conversely g_1 = v_1, g_i = v_{i-1}^-1 v_i.
    """
    raw = []
    if w.alphabet is Alphabet.V:
        for symbol, sign in w.letters:
            image = [(GenSym(Family.G, i), 1) for i in range(1, symbol.index + 1)]
            raw.extend(image if sign > 0 else [(s, -e) for s, e in reversed(image)])
        return FreeWord(Alphabet.G, tuple(raw))
    if w.alphabet is Alphabet.G:
        for symbol, sign in w.letters:
            i = symbol.index
            image = [(GenSym(Family.V, 1), 1)] if i == 1 else \
                [(GenSym(Family.V, i - 1), -1), (GenSym(Family.V, i), 1)]
            raw.extend(image if sign > 0 else [(s, -e) for s, e in reversed(image)])
        return FreeWord(Alphabet.V, tuple(raw))
    raise FamilyMismatchError(f"basis change needs a v- or g-word, got {w.alphabet.label}")


@dataclass(frozen=True)
class FactorPartition:
    """Partition of {1..n} into consecutive intervals (start, end)."""

    n: int
    blocks: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        expected = 1
        for start, end in self.blocks:
            if start != expected or end < start:
                raise IndexRangeError(f"blocks {self.blocks} are not consecutive intervals")
            expected = end + 1
        if expected != self.n + 1:
            raise IndexRangeError(f"blocks {self.blocks} do not cover 1..{self.n}")

    @classmethod
    def from_cuts(cls, n: int, cuts: Sequence[int]) -> 'FactorPartition':
        """Blocks [1, i1], [i1+1, i2], ..., [ik+1, n]."""
        bounds = [0] + list(cuts) + [n]
        return cls(n, tuple((bounds[r] + 1, bounds[r + 1]) for r in range(len(bounds) - 1)))

    def block_of(self, letter: int) -> int:
        for block_id, (start, end) in enumerate(self.blocks, start=1):
            if start <= letter <= end:
                return block_id
        raise IndexRangeError(f"letter x{letter} outside partition of 1..{self.n}")


def syllable_decompose(w: InvolutiveWord, partition: FactorPartition) -> List[Tuple[int, InvolutiveWord]]:
    """Maximal same-block runs of w, with 1-based block ids."""
    if partition.n != w.n:
        raise FamilyMismatchError("partition and word disagree on n")
    syllables: List[Tuple[int, List[int]]] = []
    for letter in w.letters:
        block = partition.block_of(letter)
        if syllables and syllables[-1][0] == block:
            syllables[-1][1].append(letter)
        else:
            syllables.append((block, [letter]))
    return [(block, InvolutiveWord(w.n, tuple(run))) for block, run in syllables]


# -- free products of cyclic groups -------------------------------------------------

Syllable = Tuple[int, int]


def _normalize_exponent(exponent: int, order) -> int:
    if order == INFINITE:
        return exponent
    return exponent % order


def _fp_reduce_syllables(raw: Iterable[Syllable], orders: Tuple) -> Tuple[Syllable, ...]:
    stack: List[Syllable] = []
    for factor, exponent in raw:
        if not 1 <= factor <= len(orders):
            raise IllegalExponentError(f"factor {factor} does not exist (orders {orders})")
        if not isinstance(exponent, int):
            raise IllegalExponentError(f"exponent {exponent!r} is not an integer")
        order = orders[factor - 1]
        exponent = _normalize_exponent(exponent, order)
        if exponent == 0:
            continue
        if stack and stack[-1][0] == factor:
            merged = _normalize_exponent(stack[-1][1] + exponent, order)
            stack.pop()
            if merged:
                stack.append((factor, merged))
        else:
            stack.append((factor, exponent))
    return tuple(stack)


@dataclass(frozen=True)
class FreeProductWord:
    """
    Reduced word in a free product of cyclic groups.

    Factor ids are 1-based positions in orders; finite-order exponents are
    stored in 1..m-1.
    """

    orders: Tuple
    syllables: Tuple[Syllable, ...] = field(default=())

    def __post_init__(self):
        for order in self.orders:
            if order != INFINITE and (not isinstance(order, int) or order < 2):
                raise IllegalExponentError(f"factor order must be >= 2 or infinite, got {order}")
        object.__setattr__(self, 'orders', tuple(self.orders))
        object.__setattr__(self, 'syllables', _fp_reduce_syllables(self.syllables, self.orders))

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: 'FreeProductWord') -> 'FreeProductWord':
        if other.orders != self.orders:
            raise FamilyMismatchError(f"free products {self.orders} and {other.orders}")
        return FreeProductWord(self.orders, self.syllables + other.syllables)

    def __invert__(self) -> 'FreeProductWord':
        return FreeProductWord(self.orders, tuple((f, -e) for f, e in reversed(self.syllables)))

    def __pow__(self, exponent: int) -> 'FreeProductWord':
        base = self if exponent >= 0 else ~self
        return FreeProductWord(self.orders, base.syllables * abs(exponent))

    def __str__(self) -> str:
        return fp_text(self)

    def letter_length(self) -> int:
        """Length counting each syllable by its absolute exponent."""
        return sum(abs(e) for _, e in self.syllables)


def fp_reduce(raw: Sequence[Syllable], orders: Sequence) -> FreeProductWord:
    return FreeProductWord(tuple(orders), tuple(raw))


def fp_gen(factor: int, orders: Sequence, exponent: int = 1) -> FreeProductWord:
    return FreeProductWord(tuple(orders), ((factor, exponent),))


def fp_cyclic_reduce(w: FreeProductWord) -> Tuple[FreeProductWord, FreeProductWord]:
    """Split w as conjugator * core * conjugator^-1 with core cyclically reduced."""
    conjugator = FreeProductWord(w.orders)
    core = w
    while len(core.syllables) >= 2 and core.syllables[0][0] == core.syllables[-1][0]:
        first = FreeProductWord(w.orders, core.syllables[:1])
        conjugator = conjugator * first
        core = ~first * core * first
    return conjugator, core


def fp_conjugate(w1: FreeProductWord, w2: FreeProductWord) -> Optional[FreeProductWord]:
    """
    Conjugacy in a free product of cyclic groups.

    Returns:
        Witness c with c * w1 * c^-1 == w2, or None
    """
    if w1.orders != w2.orders:
        raise FamilyMismatchError(f"free products {w1.orders} and {w2.orders}")
    p1, k1 = fp_cyclic_reduce(w1)
    p2, k2 = fp_cyclic_reduce(w2)
    shifts = _shifts(k1.syllables, k2.syllables)
    if not shifts:
        return None
    shift = shifts[0]
    head = FreeProductWord(w1.orders, k1.syllables[:shift])
    tail = FreeProductWord(w1.orders, k1.syllables[shift:])
    candidates = [p2 * ~head * ~p1, p2 * tail * ~p1]
    return min(candidates, key=lambda c: (len(c), c.syllables))


def fp_apply(w: FreeProductWord, images: Mapping[int, FreeProductWord]) -> FreeProductWord:
    """Substitute factor-generator images into w (exponent-wise powers)."""
    if not images:
        return w
    orders = next(iter(images.values())).orders
    result = FreeProductWord(orders)
    for factor, exponent in w.syllables:
        result = result * images[factor] ** exponent
    return result


def parse_fp_word(text: str, orders: Sequence) -> FreeProductWord:
    """Parse free-product text such as "u v^2 u" (u is factor 1, v factor 2)."""
    names: Dict[str, int] = {name: i + 1 for i, name in enumerate(FACTOR_NAMES[:len(orders)])}
    raw: List[Syllable] = []
    for match in re.finditer(r'\S+', text):
        token = match.group(0)
        if token == 'e':
            continue
        parsed = re.match(r'^([a-z])(?:\^(-?\d+))?$', token)
        if not parsed or parsed.group(1) not in names:
            raise WordParseError(f"cannot parse free-product token '{token}'", match.start() + 1, token)
        raw.append((names[parsed.group(1)], int(parsed.group(2) or 1)))
    return FreeProductWord(tuple(orders), tuple(raw))


def fp_text(w: FreeProductWord) -> str:
    if w.is_identity():
        return 'e'
    parts = []
    for factor, exponent in w.syllables:
        name = FACTOR_NAMES[factor - 1] if factor <= len(FACTOR_NAMES) else f"f{factor}"
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return ' '.join(parts)


def parse_k_word(text: str, n: int) -> InvolutiveWord:
    """Parse K-word text such as "x1 x2 x3"."""
    tokens = tokenize(text, {'x': Family.X}, True)
    return InvolutiveWord(n, tuple(token.index for token, _ in expand_tokens(tokens)))


def k_text(w: InvolutiveWord) -> str:
    if w.is_identity():
        return 'e'
    return ' '.join(f"x{letter}" for letter in w.letters)
