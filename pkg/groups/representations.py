"""
ArtinBD Toolkit - Braid group representations
License: MIT

The three braid actions used throughout the toolkit:

    rhoB     B_n on the free group F_n = <u_1..u_n>
    rhoDv    B_n on F_{n-1} in the v-basis
    rhoDg    B_n on F_{n-1} in the g-basis
    rhoPlus  B_n on K, the free product of n copies of C2

Actions are left actions: braid letters are applied right to left, so
apply(b1 * b2, w) == apply(b1, apply(b2, w)).
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import ImmutableMatrix, zeros

from .braids import BraidWord, perm_image
from .errors import FamilyMismatchError, FlavorError, IndexRangeError
from .free_words import FreeWord, abelianize, generators
from .involutive_products import InvolutiveWord, delta_word, embed_g, express_in_g, x
from .symbols import Alphabet, Family, GenSym

logger = logging.getLogger('artinbd.groups.representations')

Word = Union[FreeWord, InvolutiveWord]
Key = Union[GenSym, int]


class RepKind(Enum):
    RHO_B = 'rhoB'
    RHO_D_V = 'rhoDv'
    RHO_D_G = 'rhoDg'
    RHO_PLUS = 'rhoPlus'

    @classmethod
    def from_name(cls, name: str) -> 'RepKind':
        for kind in cls:
            if kind.value == name:
                return kind
        raise FlavorError(f"unknown representation '{name}' (expected rhoB, rhoDv, rhoDg or rhoPlus)")


FIBER_ALPHABET = {
    RepKind.RHO_B: Alphabet.U,
    RepKind.RHO_D_V: Alphabet.V,
    RepKind.RHO_D_G: Alphabet.G,
}

MIN_STRANDS = {
    RepKind.RHO_B: 2,
    RepKind.RHO_D_V: 4,
    RepKind.RHO_D_G: 4,
    RepKind.RHO_PLUS: 2,
}


@dataclass(frozen=True)
class Representation:
    """
    Generator image tables for a braid action.

    forward[i] and backward[i] hold the images of the moved fiber generators
    under a_i and a_i^-1; generators missing from a table are fixed.
    """

    kind: RepKind
    n: int
    forward: Tuple[Tuple[Tuple[Key, Word], ...], ...]
    backward: Tuple[Tuple[Tuple[Key, Word], ...], ...]

    def __post_init__(self):
        tables = {(i + 1, 1): dict(t) for i, t in enumerate(self.forward)}
        tables.update({(i + 1, -1): dict(t) for i, t in enumerate(self.backward)})
        object.__setattr__(self, '_tables', tables)

    def table(self, i: int, sign: int) -> Dict[Key, Word]:
        return self._tables[(i, 1 if sign > 0 else -1)]

    @property
    def fiber_rank(self) -> int:
        return self.n if self.kind in (RepKind.RHO_B, RepKind.RHO_PLUS) else self.n - 1

    def fiber_generators(self) -> List[Word]:
        if self.kind is RepKind.RHO_PLUS:
            return [x(i, self.n) for i in range(1, self.n + 1)]
        return generators(FIBER_ALPHABET[self.kind], self.fiber_rank)

    def fiber_keys(self) -> List[Key]:
        if self.kind is RepKind.RHO_PLUS:
            return list(range(1, self.n + 1))
        family = FIBER_ALPHABET[self.kind].families[0]
        return [GenSym(family, i) for i in range(1, self.fiber_rank + 1)]

    def with_image(self, i: int, key: Key, image: Word, sign: int = 1) -> 'Representation':
        """Copy with one generator image replaced (used for mutation checks)."""
        tables = [dict(t) for t in (self.forward if sign > 0 else self.backward)]
        tables[i - 1][key] = image
        frozen = tuple(tuple(t.items()) for t in tables)
        if sign > 0:
            return replace(self, forward=frozen)
        return replace(self, backward=frozen)


def _fw(family: Family, *letters: Tuple[int, int]) -> FreeWord:
    alphabet = {Family.U: Alphabet.U, Family.V: Alphabet.V, Family.G: Alphabet.G}[family]
    return FreeWord(alphabet, tuple((GenSym(family, i), s) for i, s in letters))


def _rho_b_tables(n: int):
    u = Family.U
    forward, backward = [], []
    for i in range(1, n):
        forward.append({
            GenSym(u, i): _fw(u, (i + 1, 1)),
            GenSym(u, i + 1): _fw(u, (i + 1, -1), (i, 1), (i + 1, 1)),
        })
        backward.append({
            GenSym(u, i): _fw(u, (i, 1), (i + 1, 1), (i, -1)),
            GenSym(u, i + 1): _fw(u, (i, 1)),
        })
    return forward, backward


def _rho_d_v_tables(n: int):
    v = Family.V
    forward, backward = [], []
    forward.append({GenSym(v, j): _fw(v, (1, -1), (j, 1)) for j in range(2, n)})
    backward.append({GenSym(v, j): _fw(v, (1, 1), (j, 1)) for j in range(2, n)})
    for i in range(2, n):
        forward.append({
            GenSym(v, i - 1): _fw(v, (i, 1)),
            GenSym(v, i): _fw(v, (i, 1), (i - 1, -1), (i, 1)),
        })
        backward.append({
            GenSym(v, i - 1): _fw(v, (i - 1, 1), (i, -1), (i - 1, 1)),
            GenSym(v, i): _fw(v, (i - 1, 1)),
        })
    return forward, backward


def _rho_d_g_tables(n: int):
    g = Family.G
    forward, backward = [], []
    for i in range(1, n):
        moved_forward, moved_backward = {}, {}
        if i >= 2:
            moved_forward[GenSym(g, i - 1)] = _fw(g, (i - 1, 1), (i, 1))
            moved_backward[GenSym(g, i - 1)] = _fw(g, (i - 1, 1), (i, -1))
        if i + 1 <= n - 1:
            moved_forward[GenSym(g, i + 1)] = _fw(g, (i, -1), (i + 1, 1))
            moved_backward[GenSym(g, i + 1)] = _fw(g, (i, 1), (i + 1, 1))
        forward.append(moved_forward)
        backward.append(moved_backward)
    return forward, backward


def _rho_plus_tables(n: int):
    forward, backward = [], []
    for i in range(1, n):
        forward.append({
            i: InvolutiveWord(n, (i + 1,)),
            i + 1: InvolutiveWord(n, (i + 1, i, i + 1)),
        })
        backward.append({
            i: InvolutiveWord(n, (i, i + 1, i)),
            i + 1: InvolutiveWord(n, (i,)),
        })
    return forward, backward


TABLE_BUILDERS = {
    RepKind.RHO_B: _rho_b_tables,
    RepKind.RHO_D_V: _rho_d_v_tables,
    RepKind.RHO_D_G: _rho_d_g_tables,
    RepKind.RHO_PLUS: _rho_plus_tables,
}


@lru_cache(maxsize=None)
def representation(kind: RepKind, n: int) -> Representation:
    """Build (and cache) the representation of the given kind on n strands."""
    if n < MIN_STRANDS[kind]:
        raise IndexRangeError(f"{kind.value} needs n >= {MIN_STRANDS[kind]}, got {n}")
    forward, backward = TABLE_BUILDERS[kind](n)
    freeze = lambda tables: tuple(tuple(t.items()) for t in tables)
    return Representation(kind, n, freeze(forward), freeze(backward))


def substitute(w: Word, images: Mapping[Key, Word]) -> Word:
    """Apply an endomorphism given on generators; missing generators are fixed."""
    if isinstance(w, InvolutiveWord):
        raw: List[int] = []
        for letter in w.letters:
            image = images.get(letter)
            raw.extend(image.letters if image is not None else (letter,))
        return InvolutiveWord(w.n, tuple(raw))
    raw_free = []
    for symbol, sign in w.letters:
        image = images.get(symbol)
        if image is None:
            raw_free.append((symbol, sign))
        elif sign > 0:
            raw_free.extend(image.letters)
        else:
            raw_free.extend((s, -e) for s, e in reversed(image.letters))
    return FreeWord(w.alphabet, tuple(raw_free))


def _check_fiber(rep: Representation, w: Word):
    if rep.kind is RepKind.RHO_PLUS:
        if not isinstance(w, InvolutiveWord):
            raise FamilyMismatchError("rhoPlus acts on K-words")
        if w.n != rep.n:
            raise FamilyMismatchError(f"K-word for n={w.n}, representation on n={rep.n}")
        return
    if not isinstance(w, FreeWord) or w.alphabet is not FIBER_ALPHABET[rep.kind]:
        raise FamilyMismatchError(f"{rep.kind.value} acts on {FIBER_ALPHABET[rep.kind].label}-words")
    for symbol, _ in w.letters:
        if symbol.index > rep.fiber_rank:
            raise IndexRangeError(f"generator index {symbol.index} exceeds fiber rank {rep.fiber_rank}")


def apply(rep: Representation, b: BraidWord, w: Word) -> Word:
    """Left action of the braid b on the fiber word w."""
    if b.n != rep.n:
        raise FamilyMismatchError(f"braid on {b.n} strands, representation on {rep.n}")
    _check_fiber(rep, w)
    result = w
    for i, sign in reversed(b.letters):
        result = substitute(result, rep.table(i, sign))
    return result


def act(kind: RepKind, b: BraidWord, w: Word) -> Word:
    return apply(representation(kind, b.n), b, w)


def inverse_tables_consistent(rep: Representation) -> bool:
    """The a_i^-1 table undoes the a_i table on every fiber generator."""
    for i in range(1, rep.n):
        forward, backward = rep.table(i, 1), rep.table(i, -1)
        for gen in rep.fiber_generators():
            if substitute(substitute(gen, forward), backward) != gen:
                return False
            if substitute(substitute(gen, backward), forward) != gen:
                return False
    return True


def verify_braid_relations(rep: Representation) -> bool:
    """Check a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1} and far commutation on generators."""
    n = rep.n
    pairs: List[Tuple[BraidWord, BraidWord]] = []
    for i in range(1, n - 1):
        pairs.append((BraidWord(n, ((i, 1), (i + 1, 1), (i, 1))),
                      BraidWord(n, ((i + 1, 1), (i, 1), (i + 1, 1)))))
    for i in range(1, n):
        for j in range(i + 2, n):
            pairs.append((BraidWord(n, ((i, 1), (j, 1))), BraidWord(n, ((j, 1), (i, 1)))))
    for left, right in pairs:
        for gen in rep.fiber_generators():
            if apply(rep, left, gen) != apply(rep, right, gen):
                logger.debug("relation %s = %s fails on %s", left, right, gen)
                return False
    return True


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality in B_n through the faithful action on F_n."""
    if b1.n != b2.n:
        raise FamilyMismatchError(f"braids on {b1.n} and {b2.n} strands")
    rep = representation(RepKind.RHO_B, b1.n)
    return all(apply(rep, b1, gen) == apply(rep, b2, gen) for gen in rep.fiber_generators())


def acts_trivially(rep: Representation, b: BraidWord) -> bool:
    return all(apply(rep, b, gen) == gen for gen in rep.fiber_generators())


def homology_matrix(rep: Representation, b: BraidWord) -> ImmutableMatrix:
    """
    Action on the abelianization of the free fiber.

    Column j is the class of the image of the j-th generator, so the matrix of
    b1 * b2 is the product of the matrices.
    """
    if rep.kind is RepKind.RHO_PLUS:
        raise FlavorError("homology matrix is defined for free fibers only")
    rank = rep.fiber_rank
    matrix = zeros(rank, rank)
    for j, gen in enumerate(rep.fiber_generators()):
        column = abelianize(apply(rep, b, gen), rank)
        for i, value in enumerate(column.coords):
            matrix[i, j] = value
    return ImmutableMatrix(matrix)


def permutation_matrix(b: BraidWord) -> ImmutableMatrix:
    """Matrix with a 1 in row perm(j), column j."""
    images = perm_image(b).array_form
    matrix = zeros(b.n, b.n)
    for j, image in enumerate(images):
        matrix[image, j] = 1
    return ImmutableMatrix(matrix)


def conjugation_images(c: Word, rep: Representation) -> Dict[Key, Word]:
    """Generator images of the inner automorphism w -> c w c^-1."""
    return {key: c * gen * ~c for key, gen in zip(rep.fiber_keys(), rep.fiber_generators())}


def check_equivariant(images: Mapping[Key, Word], rep: Representation,
                      braids: Iterable[BraidWord]) -> bool:
    """True iff phi(gamma(s)) == gamma(phi(s)) for every generator s and listed braid."""
    for gamma in braids:
        for key, gen in zip(rep.fiber_keys(), rep.fiber_generators()):
            left = substitute(apply(rep, gamma, gen), images)
            right = apply(rep, gamma, images.get(key, gen))
            if left != right:
                return False
    return True


def standard_generators(n: int) -> List[BraidWord]:
    return [BraidWord(n, ((i, 1),)) for i in range(1, n)]


def compat_embed(b: BraidWord, w: FreeWord, n: int) -> bool:
    """embed_g(rhoDg(b)(w)) == rhoPlus(b)(embed_g(w))."""
    left = embed_g(act(RepKind.RHO_D_G, b, w), n)
    right = act(RepKind.RHO_PLUS, b, embed_g(w, n))
    return left == right


def u0_word(n: int) -> FreeWord:
    """u0 = u1 u2 ... un."""
    return FreeWord(Alphabet.U, tuple((GenSym(Family.U, i), 1) for i in range(1, n + 1)))


def odd_fixed_words(n: int) -> Tuple[FreeWord, FreeWord, FreeWord]:
    """
    For odd n: x = g1 g3 ... g_{n-2}, x_hat = x_n x x_n and z = x * x_hat = delta^2,
    all as g-words.
    """
    if n < 5 or n % 2 == 0:
        raise IndexRangeError(f"odd fixed words need odd n >= 5, got {n}")
    x_g = FreeWord(Alphabet.G, tuple((GenSym(Family.G, i), 1) for i in range(1, n - 1, 2)))
    x_k = embed_g(x_g, n)
    x_hat = express_in_g(x(n, n) * x_k * x(n, n))
    z = express_in_g(delta_word(n) ** 2)
    return x_g, x_hat, z


def beta_shift_images(n: int) -> Dict[int, FreeWord]:
    """Expected rhoDg(beta)(g_i) = g_{i+1} for i <= n-3."""
    return {i: FreeWord(Alphabet.G, ((GenSym(Family.G, i + 1), 1),)) for i in range(1, n - 2)}
