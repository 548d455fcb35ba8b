"""
ArtinBD Toolkit - Semidirect products
License: MIT

Elements of A(B_n) = F_n x| B_n, A(D_n) = F_{n-1} x| B_n and K x| B_n written as
(fiber word, braid) pairs with (w1, g1)(w2, g2) = (w1 * g1(w2), g1 g2).

Also holds the isomorphisms phi/psi with the Artin presentations, the
projections and sections to B_n, centers, the special automorphisms eps_n and
tau_n and the projection to signed permutation groups.
"""

import logging
import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from sympy import ImmutableMatrix, ones
from sympy.combinatorics import Permutation

from .braids import BraidWord, braid_text, parse_braid, random_braid, zeta
from .errors import FamilyMismatchError, FlavorError, IndexRangeError, WordParseError
from .free_words import FreeWord, parse_word, word_text
from .involutive_products import (InvolutiveWord, basis_change_v_g, delta_word, embed_g,
                                  express_in_g, k_text, parse_k_word, x)
from .representations import (RepKind, Word, apply, braid_equal, representation, u0_word)
from .symbols import Alphabet, Family, GenSym

logger = logging.getLogger('artinbd.groups.semidirect')


class FlavorTag(Enum):
    ARTIN_B = 'ArtinB'
    ARTIN_D = 'ArtinD'
    K_SEMIDIRECT = 'KSemidirect'

    @classmethod
    def from_name(cls, name: str) -> 'FlavorTag':
        aliases = {'B': cls.ARTIN_B, 'D': cls.ARTIN_D, 'K': cls.K_SEMIDIRECT}
        if name in aliases:
            return aliases[name]
        for tag in cls:
            if tag.value == name:
                return tag
        raise FlavorError(f"unknown flavor '{name}' (expected B, D or K)")


MIN_RANK = {FlavorTag.ARTIN_B: 3, FlavorTag.ARTIN_D: 4, FlavorTag.K_SEMIDIRECT: 3}
FLAVOR_REP = {
    FlavorTag.ARTIN_B: RepKind.RHO_B,
    FlavorTag.ARTIN_D: RepKind.RHO_D_G,
    FlavorTag.K_SEMIDIRECT: RepKind.RHO_PLUS,
}
PRESENTATION_ALPHABET = {FlavorTag.ARTIN_B: Alphabet.PRES_B, FlavorTag.ARTIN_D: Alphabet.PRES_D}


@dataclass(frozen=True)
class GroupFlavor:
    tag: FlavorTag
    n: int

    def __post_init__(self):
        if self.n < MIN_RANK[self.tag]:
            raise FlavorError(f"{self.tag.value} needs n >= {MIN_RANK[self.tag]}, got {self.n}")

    @property
    def rep(self):
        return representation(FLAVOR_REP[self.tag], self.n)

    def fiber_identity(self) -> Word:
        if self.tag is FlavorTag.K_SEMIDIRECT:
            return InvolutiveWord(self.n)
        return FreeWord(Alphabet.U if self.tag is FlavorTag.ARTIN_B else Alphabet.G)


@dataclass(frozen=True)
class SemidirectElement:
    """(fiber, braid) pair; the fiber family is fixed by the flavor."""

    flavor: GroupFlavor
    fiber: Word
    braid: BraidWord

    def __post_init__(self):
        tag = self.flavor.tag
        if tag is FlavorTag.K_SEMIDIRECT:
            ok = isinstance(self.fiber, InvolutiveWord) and self.fiber.n == self.flavor.n
        else:
            expected = Alphabet.U if tag is FlavorTag.ARTIN_B else Alphabet.G
            ok = isinstance(self.fiber, FreeWord) and self.fiber.alphabet is expected
            if ok:
                rank = self.flavor.rep.fiber_rank
                ok = all(symbol.index <= rank for symbol, _ in self.fiber.letters)
        if not ok:
            raise FamilyMismatchError(f"fiber {self.fiber} does not belong to {tag.value} n={self.flavor.n}")
        if self.braid.n != self.flavor.n:
            raise FamilyMismatchError(f"braid on {self.braid.n} strands in {tag.value} n={self.flavor.n}")

    def __mul__(self, other: 'SemidirectElement') -> 'SemidirectElement':
        return sd_multiply(self, other)

    def __invert__(self) -> 'SemidirectElement':
        return sd_invert(self)

    def __pow__(self, exponent: int) -> 'SemidirectElement':
        base = self if exponent >= 0 else sd_invert(self)
        result = sd_identity(self.flavor)
        for _ in range(abs(exponent)):
            result = sd_multiply(result, base)
        return result

    def __str__(self) -> str:
        return element_text(self)


def _check_flavor(e1: SemidirectElement, e2: SemidirectElement):
    if e1.flavor != e2.flavor:
        raise FlavorError(f"cannot combine {e1.flavor.tag.value} n={e1.flavor.n} "
                          f"with {e2.flavor.tag.value} n={e2.flavor.n}")


def sd_identity(flavor: GroupFlavor) -> SemidirectElement:
    return SemidirectElement(flavor, flavor.fiber_identity(), BraidWord(flavor.n))


def fiber_element(flavor: GroupFlavor, w: Word) -> SemidirectElement:
    return SemidirectElement(flavor, w, BraidWord(flavor.n))


def sd_multiply(e1: SemidirectElement, e2: SemidirectElement) -> SemidirectElement:
    _check_flavor(e1, e2)
    twisted = apply(e1.flavor.rep, e1.braid, e2.fiber)
    return SemidirectElement(e1.flavor, e1.fiber * twisted, e1.braid * e2.braid)


def sd_invert(e: SemidirectElement) -> SemidirectElement:
    inverse_braid = ~e.braid
    return SemidirectElement(e.flavor, apply(e.flavor.rep, inverse_braid, ~e.fiber), inverse_braid)


def sd_equal(e1: SemidirectElement, e2: SemidirectElement) -> bool:
    """Fibers compare exactly, braids through the faithful braid oracle."""
    _check_flavor(e1, e2)
    return e1.fiber == e2.fiber and braid_equal(e1.braid, e2.braid)


def commutes(e1: SemidirectElement, e2: SemidirectElement) -> bool:
    return sd_equal(e1 * e2, e2 * e1)


def pi(e: SemidirectElement) -> BraidWord:
    """Projection to B_n."""
    return e.braid


def section(b: BraidWord, flavor: GroupFlavor) -> SemidirectElement:
    """Section B_n -> group, a_i -> beta_{i+1} (resp. delta_{i+1})."""
    return SemidirectElement(flavor, flavor.fiber_identity(), b)


# -- presentations ---------------------------------------------------------------

def presentation_generator(flavor: GroupFlavor, i: int) -> FreeWord:
    alphabet = PRESENTATION_ALPHABET[flavor.tag]
    return FreeWord.gen(alphabet, alphabet.families[0], i)


def _phi_generator(flavor: GroupFlavor, i: int) -> SemidirectElement:
    n = flavor.n
    if not 1 <= i <= n:
        raise IndexRangeError(f"presentation generator {i} out of range for n={n}")
    identity_fiber = flavor.fiber_identity()
    if flavor.tag is FlavorTag.ARTIN_B:
        if i == 1:
            return fiber_element(flavor, FreeWord.gen(Alphabet.U, Family.U, 1))
        return SemidirectElement(flavor, identity_fiber, BraidWord(n, ((i - 1, 1),)))
    if i == 1:
        return SemidirectElement(flavor, FreeWord.gen(Alphabet.G, Family.G, 1), BraidWord(n, ((1, 1),)))
    return SemidirectElement(flavor, identity_fiber, BraidWord(n, ((i - 1, 1),)))


def phi(word: FreeWord, flavor: GroupFlavor) -> SemidirectElement:
    """
    Presentation word -> semidirect coordinates.

    phi_B: beta1 -> (u1, e), beta_i -> (e, a_{i-1})
    phi_D: delta1 -> (g1, a1), delta_i -> (e, a_{i-1})
    """
    if flavor.tag not in PRESENTATION_ALPHABET:
        raise FlavorError(f"{flavor.tag.value} has no Artin presentation")
    if word.alphabet is not PRESENTATION_ALPHABET[flavor.tag]:
        raise FamilyMismatchError(f"expected a {PRESENTATION_ALPHABET[flavor.tag].label} word")
    images = {i: _phi_generator(flavor, i) for i in {s.index for s, _ in word.letters}}
    result = sd_identity(flavor)
    for symbol, sign in word.letters:
        image = images[symbol.index]
        result = result * (image if sign > 0 else sd_invert(image))
    return result


def _pres_letters(alphabet: Alphabet, indices: Sequence[Tuple[int, int]]) -> List[Tuple[GenSym, int]]:
    family = alphabet.families[0]
    return [(GenSym(family, i), s) for i, s in indices]


def _psi_u(i: int) -> List[Tuple[int, int]]:
    """u_i -> b_i b_{i-1} ... b_2 b_1 b_2^-1 ... b_i^-1."""
    down = [(j, 1) for j in range(i, 1, -1)]
    return down + [(1, 1)] + [(j, -1) for j in range(2, i + 1)]


def _psi_v(i: int) -> List[Tuple[int, int]]:
    """v_i -> d_{i+1} d_i ... d_3 d_1 d_2^-1 d_3^-1 ... d_{i+1}^-1 (empty conjugator at i = 1)."""
    conjugator = [(j, 1) for j in range(i + 1, 2, -1)]
    return conjugator + [(1, 1), (2, -1)] + [(j, -1) for j in range(3, i + 2)]


def psi(e: SemidirectElement) -> FreeWord:
    """Semidirect coordinates -> presentation word: psi(w, g) = psi(w) psi(g)."""
    tag = e.flavor.tag
    if tag not in PRESENTATION_ALPHABET:
        raise FlavorError(f"{tag.value} has no Artin presentation")
    alphabet = PRESENTATION_ALPHABET[tag]
    raw: List[Tuple[GenSym, int]] = []
    if tag is FlavorTag.ARTIN_B:
        fiber_letters, fiber_image = e.fiber.letters, _psi_u
    else:
        fiber_letters, fiber_image = basis_change_v_g(e.fiber).letters, _psi_v
    for symbol, sign in fiber_letters:
        image = _pres_letters(alphabet, fiber_image(symbol.index))
        raw.extend(image if sign > 0 else [(s, -k) for s, k in reversed(image)])
    raw.extend(_pres_letters(alphabet, [(i + 1, s) for i, s in e.braid.letters]))
    return FreeWord(alphabet, tuple(raw))


def alternating_word(first: int, second: int, m: int) -> List[int]:
    """first second first ... of length m."""
    return [first if position % 2 == 0 else second for position in range(m)]


def coxeter_matrix(kind: str, rank: int) -> ImmutableMatrix:
    """
    Coxeter matrix for types A, B, D.

    B: 1-2 labelled 4, then a chain 2-3-...-rank.
    D: 1 and 2 both joined to 3, then a chain 3-4-...-rank.
    """
    matrix = 2 * ones(rank, rank)
    for i in range(rank):
        matrix[i, i] = 1

    def join(a: int, b: int, label: int = 3):
        matrix[a - 1, b - 1] = matrix[b - 1, a - 1] = label

    if kind == 'A':
        for i in range(1, rank):
            join(i, i + 1)
    elif kind == 'B':
        if rank < 2:
            raise IndexRangeError("type B needs rank >= 2")
        join(1, 2, 4)
        for i in range(2, rank):
            join(i, i + 1)
    elif kind == 'D':
        if rank < 3:
            raise IndexRangeError("type D needs rank >= 3")
        join(1, 3)
        join(2, 3)
        for i in range(3, rank):
            join(i, i + 1)
    else:
        raise FlavorError(f"unknown Coxeter type '{kind}'")
    return ImmutableMatrix(matrix)


def relation_pairs(flavor: GroupFlavor) -> List[Tuple[FreeWord, FreeWord]]:
    """Defining relations w(s,t:m) = w(t,s:m) of the Artin presentation."""
    alphabet = PRESENTATION_ALPHABET.get(flavor.tag)
    if alphabet is None:
        raise FlavorError(f"{flavor.tag.value} has no Artin presentation")
    kind = 'B' if flavor.tag is FlavorTag.ARTIN_B else 'D'
    matrix = coxeter_matrix(kind, flavor.n)
    family = alphabet.families[0]
    pairs = []
    for s in range(1, flavor.n + 1):
        for t in range(s + 1, flavor.n + 1):
            m = int(matrix[s - 1, t - 1])
            left = [(GenSym(family, i), 1) for i in alternating_word(s, t, m)]
            right = [(GenSym(family, i), 1) for i in alternating_word(t, s, m)]
            pairs.append((FreeWord(alphabet, tuple(left)), FreeWord(alphabet, tuple(right))))
    return pairs


def evaluate(word: FreeWord, images: Mapping[int, SemidirectElement], flavor: GroupFlavor) -> SemidirectElement:
    result = sd_identity(flavor)
    for symbol, sign in word.letters:
        image = images[symbol.index]
        result = result * (image if sign > 0 else sd_invert(image))
    return result


def verify_presentation(images: Mapping[int, SemidirectElement],
                        relations: Sequence[Tuple[FreeWord, FreeWord]]) -> bool:
    """True iff every relation maps to an sd_equal pair under the generator images."""
    flavor = next(iter(images.values())).flavor
    for left, right in relations:
        if not sd_equal(evaluate(left, images, flavor), evaluate(right, images, flavor)):
            logger.debug("relation %s = %s fails", left, right)
            return False
    return True


def phi_images(flavor: GroupFlavor) -> Dict[int, SemidirectElement]:
    return {i: _phi_generator(flavor, i) for i in range(1, flavor.n + 1)}


# -- centers and special automorphisms -----------------------------------------

def center_element(flavor: GroupFlavor) -> SemidirectElement:
    """
    Generator of the center.

    ArtinB: u0 zeta; ArtinD: delta zeta (n even), delta^2 zeta^2 (n odd);
    KSemidirect: delta zeta.
    """
    n = flavor.n
    if flavor.tag is FlavorTag.ARTIN_B:
        return SemidirectElement(flavor, u0_word(n), zeta(n))
    if flavor.tag is FlavorTag.K_SEMIDIRECT:
        return SemidirectElement(flavor, delta_word(n), zeta(n))
    if n % 2 == 0:
        return SemidirectElement(flavor, express_in_g(delta_word(n)), zeta(n))
    return SemidirectElement(flavor, express_in_g(delta_word(n) ** 2), zeta(n) ** 2)


def _map_presentation(e: SemidirectElement, letter_map) -> SemidirectElement:
    word = psi(e)
    raw = [letter_map(symbol, sign) for symbol, sign in word.letters]
    return phi(FreeWord(word.alphabet, tuple(raw)), e.flavor)


def _eps_k_fiber_images(n: int) -> Dict[int, InvolutiveWord]:
    """eps(x1) = x1 and eps(x_{j+1}) = rhoPlus(a_j^-1)(eps(x_j))."""
    rep = representation(RepKind.RHO_PLUS, n)
    images = {1: x(1, n)}
    for j in range(1, n):
        images[j + 1] = apply(rep, BraidWord(n, ((j, -1),)), images[j])
    return images


def eps_n(e: SemidirectElement) -> SemidirectElement:
    """Invert every standard generator."""
    if e.flavor.tag is FlavorTag.K_SEMIDIRECT:
        images = _eps_k_fiber_images(e.flavor.n)
        raw: List[int] = []
        for letter in e.fiber.letters:
            raw.extend(images[letter].letters)
        inverted = BraidWord(e.flavor.n, tuple((i, -s) for i, s in e.braid.letters))
        return SemidirectElement(e.flavor, InvolutiveWord(e.flavor.n, tuple(raw)), inverted)
    return _map_presentation(e, lambda symbol, sign: (symbol, -sign))


def tau_n(e: SemidirectElement) -> SemidirectElement:
    """The graph involution swapping the two fork generators of D_n."""
    if e.flavor.tag is FlavorTag.K_SEMIDIRECT:
        x1 = fiber_element(e.flavor, x(1, e.flavor.n))
        return x1 * e * x1
    if e.flavor.tag is not FlavorTag.ARTIN_D:
        raise FlavorError(f"tau_n is not defined on {e.flavor.tag.value}")
    swap = {1: 2, 2: 1}
    return _map_presentation(
        e, lambda symbol, sign: (GenSym(symbol.family, swap.get(symbol.index, symbol.index)), sign)
    )


def to_ksemidirect(e: SemidirectElement) -> SemidirectElement:
    """Embed A(D_n) into K x| B_n through g_i -> x_i x_{i+1}."""
    if e.flavor.tag is not FlavorTag.ARTIN_D:
        raise FlavorError("only A(D_n) embeds through the g-basis")
    target = GroupFlavor(FlavorTag.K_SEMIDIRECT, e.flavor.n)
    return SemidirectElement(target, embed_g(e.fiber, e.flavor.n), e.braid)


def x0_word(n: int) -> FreeWord:
    """
    The v-word fixed by every braid under rhoDv.

    n even: v1 v2^-1 v3 ... v_{n-2}^-1 v_{n-1}
    n odd:  v1 v2^-1 ... v_{n-2} v_{n-1}^-1 v1^-1 v2 v3^-1 ... v_{n-2}^-1 v_{n-1}
    """
    if n < 4:
        raise IndexRangeError(f"x0 needs n >= 4, got {n}")
    v = Family.V
    alternating = [(GenSym(v, i), 1 if i % 2 else -1) for i in range(1, n)]
    if n % 2 == 0:
        return FreeWord(Alphabet.V, tuple(alternating))
    flipped = [(symbol, -sign) for symbol, sign in alternating[:-1]] + [(GenSym(v, n - 1), 1)]
    return FreeWord(Alphabet.V, tuple(alternating + flipped))


# -- signed permutations ----------------------------------------------------------

@dataclass(frozen=True)
class SignedPermutation:
    """
    Monomial map e_j -> signs[j] * e_{perm[j]} (1-based perm images).

    Composition is function composition: (f * g)(e_j) = f(g(e_j)).
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)) or len(self.signs) != len(self.perm):
            raise IndexRangeError(f"not a signed permutation: {self.perm}, {self.signs}")

    @classmethod
    def identity(cls, n: int) -> 'SignedPermutation':
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @classmethod
    def flip(cls, i: int, n: int) -> 'SignedPermutation':
        return cls(tuple(range(1, n + 1)), tuple(-1 if j == i else 1 for j in range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, n: int) -> 'SignedPermutation':
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls(tuple(perm), (1,) * n)

    def __mul__(self, other: 'SignedPermutation') -> 'SignedPermutation':
        perm = tuple(self.perm[other.perm[j] - 1] for j in range(len(self.perm)))
        signs = tuple(other.signs[j] * self.signs[other.perm[j] - 1] for j in range(len(self.perm)))
        return SignedPermutation(perm, signs)

    def is_even(self) -> bool:
        return self.signs.count(-1) % 2 == 0

    def permutation(self) -> Permutation:
        return Permutation([j - 1 for j in self.perm])


def coxeter_project(e: SemidirectElement) -> SignedPermutation:
    """
    Projection to the signed permutation group.

    u_i and x_i go to the sign change of coordinate i, g_i to the sign change
    of coordinates i and i+1, a_i to the transposition (i, i+1).
    """
    n = e.flavor.n
    result = SignedPermutation.identity(n)
    if e.flavor.tag is FlavorTag.K_SEMIDIRECT:
        for letter in e.fiber.letters:
            result = result * SignedPermutation.flip(letter, n)
    else:
        for symbol, _ in e.fiber.letters:
            result = result * SignedPermutation.flip(symbol.index, n)
            if e.flavor.tag is FlavorTag.ARTIN_D:
                result = result * SignedPermutation.flip(symbol.index + 1, n)
    for i, _ in e.braid.letters:
        result = result * SignedPermutation.transposition(i, n)
    return result


# -- text and random elements -----------------------------------------------------

ELEMENT_PATTERN = re.compile(r'^\s*\((.*)\|(.*)\)\s*$')


def parse_fiber(text: str, flavor: GroupFlavor) -> Word:
    if flavor.tag is FlavorTag.K_SEMIDIRECT:
        return parse_k_word(text, flavor.n)
    if flavor.tag is FlavorTag.ARTIN_B:
        return parse_word(text, Alphabet.U)
    if re.search(r'\bv\d', text):
        return basis_change_v_g(parse_word(text, Alphabet.V))
    return parse_word(text, Alphabet.G)


def parse_element(text: str, flavor: GroupFlavor) -> SemidirectElement:
    """Parse "(g1 g2 | a1 a2)"; v-basis fibers are converted to the g-basis."""
    match = ELEMENT_PATTERN.match(text)
    if not match:
        raise WordParseError("expected '(fiber | braid)'", 1, text)
    return SemidirectElement(flavor, parse_fiber(match.group(1), flavor),
                             parse_braid(match.group(2), flavor.n))


def fiber_text(w: Word) -> str:
    return k_text(w) if isinstance(w, InvolutiveWord) else word_text(w)


def element_text(e: SemidirectElement) -> str:
    return f"({fiber_text(e.fiber)} | {braid_text(e.braid)})"


def random_fiber(flavor: GroupFlavor, length: int, rng: random.Random) -> Word:
    if flavor.tag is FlavorTag.K_SEMIDIRECT:
        return InvolutiveWord(flavor.n, tuple(rng.randint(1, flavor.n) for _ in range(length)))
    alphabet = Alphabet.U if flavor.tag is FlavorTag.ARTIN_B else Alphabet.G
    rank = flavor.rep.fiber_rank
    family = alphabet.families[0]
    return FreeWord(alphabet, tuple((GenSym(family, rng.randint(1, rank)), rng.choice((1, -1)))
                                    for _ in range(length)))


def random_element(flavor: GroupFlavor, rng: random.Random,
                   fiber_length: int = 4, braid_length: int = 4) -> SemidirectElement:
    return SemidirectElement(flavor, random_fiber(flavor, fiber_length, rng),
                             random_braid(flavor.n, braid_length, rng))


def random_presentation_word(flavor: GroupFlavor, length: int, rng: random.Random) -> FreeWord:
    alphabet = PRESENTATION_ALPHABET[flavor.tag]
    family = alphabet.families[0]
    return FreeWord(alphabet, tuple((GenSym(family, rng.randint(1, flavor.n)), rng.choice((1, -1)))
                                    for _ in range(length)))
