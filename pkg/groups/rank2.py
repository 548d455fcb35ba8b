"""
ArtinBD Toolkit - Rank-2 Artin groups
License: MIT

A = <alpha, beta | w(alpha, beta: m) = w(beta, alpha: m)> for m >= 3.

With a = alpha beta and
    b = (alpha beta)^k alpha   (m = 2k + 1):  A = <a, b | a^m = b^2>,  c = a^m
    b = beta                   (m = 2k):      A = <a, b | a^k b = b a^k>, c = a^k
the center is <c> and A/<c> is C2 * Cm (u = b, v = a) or Ck * Z (u = a, v = b).
Elements are normalized as c^j * lift(reduced quotient word).

Automorphisms are given by the images of alpha and beta as words in the
alpha/beta alphabet and compose as maps: compose(f, g) = f o g.
"""

import logging
import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (BudgetExceededError, CenterViolationError, FlavorError, IndexRangeError,
                     NotAutomorphismError)
from .free_words import FreeWord, apply_endomorphism, parse_word, word_text
from .involutive_products import INFINITE, FreeProductWord, fp_apply, fp_cyclic_reduce, fp_gen, fp_text
from .symbols import Alphabet, Family, GenSym

logger = logging.getLogger('artinbd.groups.rank2')

ALPHA, BETA = GenSym(Family.ALPHA), GenSym(Family.BETA)
A_SYM, B_SYM = GenSym(Family.A), GenSym(Family.B)

Images = Tuple[FreeWord, FreeWord]
SPECIAL_AUTOS = ('eps', 'tau', 'eta', 'eta_inv', 'delta_conj')
DEFAULT_SYLLABLE_BUDGET = 12


def _std(*letters: Tuple[GenSym, int]) -> FreeWord:
    return FreeWord(Alphabet.STD, tuple(letters))


def _ab(*letters: Tuple[GenSym, int]) -> FreeWord:
    return FreeWord(Alphabet.AB, tuple(letters))


def alternating(first: FreeWord, second: FreeWord, m: int) -> FreeWord:
    """w(first, second: m) = first second first ... of length m."""
    result = FreeWord(first.alphabet)
    for position in range(m):
        result = result * (first if position % 2 == 0 else second)
    return result


@dataclass(frozen=True)
class Rank2NormalForm:
    """c^c_exp * lift(residue); residue lives in the central quotient."""

    c_exp: int
    residue: FreeProductWord

    def to_dict(self, group: 'Rank2Group') -> Dict[str, Any]:
        return {
            'c_exp': self.c_exp,
            'residue': word_text(group.lift(self.residue)),
            'quotient': fp_text(self.residue),
        }


@dataclass(frozen=True)
class QuotientAutoClass:
    """
    phi = nu o iota_witness on the central quotient.

    For C2 * Cm only r is set; for Ck * Z eps, r and s describe nu_{eps,r,s}.
    """

    witness: FreeProductWord
    r: int
    eps: Optional[int] = None
    s: Optional[int] = None

    def is_inner(self) -> bool:
        return self.r == 1 and self.eps in (None, 1) and not self.s


@dataclass(frozen=True)
class AutoDescriptor:
    """phi = iota_w o eps^e_eps o tau^e_tau o eta^e_eta with w = inner_witness."""

    inner_witness: FreeWord
    e_eps: int = 0
    e_tau: int = 0
    e_eta: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'inner_witness': word_text(self.inner_witness),
            'e_eps': self.e_eps,
            'e_tau': self.e_tau,
            'e_eta': self.e_eta,
        }

    def __str__(self) -> str:
        return (f"iota({word_text(self.inner_witness)}) eps^{self.e_eps} "
                f"tau^{self.e_tau} eta^{self.e_eta}")


@dataclass(frozen=True)
class Rank2Group:
    m: int
    syllable_budget: int = field(default=DEFAULT_SYLLABLE_BUDGET, compare=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 3:
            raise IndexRangeError(f"rank-2 Artin groups need m >= 3, got {self.m}")

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1

    @property
    def k(self) -> int:
        return (self.m - 1) // 2 if self.odd else self.m // 2

    @property
    def orders(self) -> Tuple:
        """Factor orders of the central quotient: (2, m) or (k, inf)."""
        return (2, self.m) if self.odd else (self.k, INFINITE)

    # -- coordinates --------------------------------------------------------------

    def _a_b_in_std(self) -> Tuple[FreeWord, FreeWord]:
        alpha, beta = _std((ALPHA, 1)), _std((BETA, 1))
        a = alpha * beta
        b = (a ** self.k) * alpha if self.odd else beta
        return a, b

    def _alpha_beta_in_ab(self) -> Tuple[FreeWord, FreeWord]:
        a, b = _ab((A_SYM, 1)), _ab((B_SYM, 1))
        if self.odd:
            return a ** -self.k * b, ~b * a ** (self.k + 1)
        return a * ~b, b

    def std_to_ab(self, w: FreeWord) -> FreeWord:
        if w.alphabet is Alphabet.AB:
            return w
        alpha, beta = self._alpha_beta_in_ab()
        return apply_endomorphism(w, {ALPHA: alpha, BETA: beta}, Alphabet.AB)

    def ab_to_std(self, w: FreeWord) -> FreeWord:
        if w.alphabet is Alphabet.STD:
            return w
        a, b = self._a_b_in_std()
        return apply_endomorphism(w, {A_SYM: a, B_SYM: b}, Alphabet.STD)

    def c_word(self) -> FreeWord:
        return _ab((A_SYM, 1)) ** (self.m if self.odd else self.k)

    def delta_word(self) -> FreeWord:
        """Delta = w(alpha, beta: m)."""
        return alternating(_std((ALPHA, 1)), _std((BETA, 1)), self.m)

    def relation(self) -> Tuple[FreeWord, FreeWord]:
        alpha, beta = _std((ALPHA, 1)), _std((BETA, 1))
        return alternating(alpha, beta, self.m), alternating(beta, alpha, self.m)

    # -- normal forms -------------------------------------------------------------

    def _factor_of(self, symbol: GenSym) -> int:
        """Quotient factor carrying the image of a or b."""
        is_a = symbol.family is Family.A
        if self.odd:
            return 2 if is_a else 1
        return 1 if is_a else 2

    def normal_form(self, w: FreeWord) -> Rank2NormalForm:
        """
        Central normal form, built by right multiplication letter by letter.

        A finite syllable reaching its order pops and adds one to c_exp; an
        inverse letter after a different syllable pushes g^(order-1) and
        subtracts one.
        """
        w = self.std_to_ab(w)
        orders = self.orders
        c_exp = 0
        stack: List[List[int]] = []
        for symbol, sign in w.letters:
            factor = self._factor_of(symbol)
            order = orders[factor - 1]
            if order == INFINITE:
                if stack and stack[-1][0] == factor:
                    stack[-1][1] += sign
                    if stack[-1][1] == 0:
                        stack.pop()
                else:
                    stack.append([factor, sign])
                continue
            if stack and stack[-1][0] == factor:
                exponent = stack[-1][1] + sign
                if exponent == order:
                    stack.pop()
                    c_exp += 1
                elif exponent == 0:
                    stack.pop()
                else:
                    stack[-1][1] = exponent
            elif sign > 0:
                stack.append([factor, 1])
            else:
                stack.append([factor, order - 1])
                c_exp -= 1
        residue = FreeProductWord(orders, tuple((f, e) for f, e in stack))
        return Rank2NormalForm(c_exp, residue)

    def nf_equal(self, w1: FreeWord, w2: FreeWord) -> bool:
        return self.normal_form(w1) == self.normal_form(w2)

    def lift(self, residue: FreeProductWord) -> FreeWord:
        """Section of the quotient: stored syllables lifted to a/b powers."""
        raw = []
        for factor, exponent in residue.syllables:
            symbol = A_SYM if self._factor_of(A_SYM) == factor else B_SYM
            raw.extend([(symbol, 1 if exponent > 0 else -1)] * abs(exponent))
        return FreeWord(Alphabet.AB, tuple(raw))

    def nf_word(self, nf: Rank2NormalForm) -> FreeWord:
        return self.c_word() ** nf.c_exp * self.lift(nf.residue)

    def quotient_image(self, w: FreeWord) -> FreeProductWord:
        """Image in A/<c>, computed directly in the free product."""
        w = self.std_to_ab(w)
        result = FreeProductWord(self.orders)
        for symbol, sign in w.letters:
            result = result * fp_gen(self._factor_of(symbol), self.orders, sign)
        return result

    def abelian_invariant(self, w: FreeWord) -> Tuple[int, ...]:
        """
        Class in H1(A).

        m even: (a-count, b-count) in Z^2; m odd: the alpha/beta degree, where
        a counts 2 and b counts m.
        """
        w = self.std_to_ab(w)
        a_count = sum(sign for symbol, sign in w.letters if symbol.family is Family.A)
        b_count = sum(sign for symbol, sign in w.letters if symbol.family is Family.B)
        if self.odd:
            return (2 * a_count + self.m * b_count,)
        return a_count, b_count

    def separated_equal(self, w1: FreeWord, w2: FreeWord) -> bool:
        """Equality through quotient image and abelian class together."""
        return (self.quotient_image(w1) == self.quotient_image(w2)
                and self.abelian_invariant(w1) == self.abelian_invariant(w2))

    # -- automorphisms ------------------------------------------------------------

    def identity_images(self) -> Images:
        return _std((ALPHA, 1)), _std((BETA, 1))

    def special_images(self, which: str) -> Images:
        alpha, beta = self.identity_images()
        if which == 'eps':
            return ~alpha, ~beta
        if which == 'tau':
            return beta, alpha
        if which in ('eta', 'eta_inv'):
            if self.odd:
                raise FlavorError(f"eta is an automorphism only for even m, got m={self.m}")
            if which == 'eta':
                return ~beta, beta * alpha * beta
            return alpha * beta * alpha, ~alpha
        if which == 'delta_conj':
            return inner_images(self.delta_word())
        raise FlavorError(f"unknown special automorphism '{which}' (expected one of {', '.join(SPECIAL_AUTOS)})")

    def special_auto_apply(self, which: str, w: FreeWord) -> FreeWord:
        """Apply eps, tau, eta, eta_inv or delta_conj; the result keeps w's alphabet."""
        return self.apply_images(self.special_images(which), w)

    def apply_images(self, images: Images, w: FreeWord) -> FreeWord:
        std = apply_endomorphism(self.ab_to_std(w), {ALPHA: images[0], BETA: images[1]}, Alphabet.STD)
        return self.std_to_ab(std) if w.alphabet is Alphabet.AB else std

    def compose(self, *maps: Images) -> Images:
        """compose(f, g, h) = f o g o h."""
        result = self.identity_images()
        for images in reversed(maps):
            result = (self.apply_images(images, result[0]), self.apply_images(images, result[1]))
        return result

    def power(self, images: Images, exponent: int) -> Images:
        result = self.identity_images()
        for _ in range(exponent):
            result = self.compose(images, result)
        return result

    def images_equal(self, f: Images, g: Images) -> bool:
        return self.nf_equal(f[0], g[0]) and self.nf_equal(f[1], g[1])

    def preserves_relation(self, images: Images) -> bool:
        left, right = alternating(images[0], images[1], self.m), alternating(images[1], images[0], self.m)
        return self.nf_equal(left, right)

    def build_auto(self, descriptor: AutoDescriptor) -> Images:
        """Images of alpha and beta under the automorphism a descriptor names."""
        if self.odd and descriptor.e_eta:
            raise FlavorError("eta exponents are only meaningful for even m")
        parts = [inner_images(self.ab_to_std(descriptor.inner_witness))]
        if descriptor.e_eps:
            parts.append(self.special_images('eps'))
        if descriptor.e_tau:
            parts.append(self.special_images('tau'))
        if descriptor.e_eta:
            which = 'eta' if descriptor.e_eta > 0 else 'eta_inv'
            parts.append(self.power(self.special_images(which), abs(descriptor.e_eta)))
        return self.compose(*parts)

    def _image_ab(self, images: Images, generator: GenSym) -> FreeWord:
        return self.apply_images(images, _ab((generator, 1)))

    def classify_auto(self, images: Images) -> AutoDescriptor:
        """
        Decompose an automorphism as iota_w o eps^e o tau^t o eta^s.

        The outer part is read off the action on H1(A); the residual map is
        then inner, and its witness comes from the central quotient with the
        central part dropped.

        Raises:
            NotAutomorphismError: relation not preserved or no inner witness
            CenterViolationError: c is not sent to c or c^-1
            BudgetExceededError: witness longer than the syllable budget
        """
        images = (self.ab_to_std(images[0]), self.ab_to_std(images[1]))
        if not self.preserves_relation(images):
            raise NotAutomorphismError("images do not preserve the defining relation")
        c = self.c_word()
        image_c = self.apply_images(images, c)
        if not (self.nf_equal(image_c, c) or self.nf_equal(image_c, ~c)):
            raise CenterViolationError(f"center generator maps to {word_text(self.std_to_ab(image_c))}")
        e_eps, e_tau, e_eta = self._outer_exponents(images)
        logger.debug("m=%d outer exponents eps=%d tau=%d eta=%d", self.m, e_eps, e_tau, e_eta)

        undo = [images]
        if e_eta:
            which = 'eta_inv' if e_eta > 0 else 'eta'
            undo.append(self.power(self.special_images(which), abs(e_eta)))
        if e_tau:
            undo.append(self.special_images('tau'))
        if e_eps:
            undo.append(self.special_images('eps'))
        residual = self.compose(*undo)

        witness = self._inner_witness(residual)
        descriptor = AutoDescriptor(witness, e_eps, e_tau, e_eta)
        if not self.images_equal(self.build_auto(descriptor), images):
            raise NotAutomorphismError("decomposition does not reproduce the images")
        return descriptor

    def _outer_exponents(self, images: Images) -> Tuple[int, int, int]:
        if self.odd:
            degree = sum(sign for _, sign in images[0].letters)
            if degree not in (1, -1):
                raise NotAutomorphismError(f"alpha maps to degree {degree}")
            return (0 if degree == 1 else 1), 0, 0
        column_a = self.abelian_invariant(self._image_ab(images, A_SYM))
        column_b = self.abelian_invariant(self._image_ab(images, B_SYM))
        nu, zero = column_a
        p, q = column_b
        if zero != 0 or nu not in (1, -1) or q not in (1, -1):
            raise NotAutomorphismError(f"abelianization matrix {column_a}, {column_b} is not invertible")
        e_tau = 0 if q == nu else 1
        return (0 if nu == 1 else 1), e_tau, nu * p - e_tau

    def _quotient_images(self, images: Images) -> Dict[int, FreeProductWord]:
        """Images of u (factor 1) and v (factor 2) in the central quotient."""
        a_image = self.quotient_image(self._image_ab(images, A_SYM))
        b_image = self.quotient_image(self._image_ab(images, B_SYM))
        return {1: b_image, 2: a_image} if self.odd else {1: a_image, 2: b_image}

    def _inner_witness(self, residual: Images) -> FreeWord:
        found = classify_quotient_auto(self._quotient_images(residual), self.syllable_budget)
        if not found.is_inner():
            raise NotAutomorphismError("residual automorphism is not inner on the central quotient")
        witness = self.lift(found.witness)
        expected = inner_images(self.ab_to_std(witness))
        if not self.images_equal(residual, expected):
            raise NotAutomorphismError("residual automorphism is not inner")
        return witness


def inner_images(w: FreeWord) -> Images:
    """iota_w: x -> w x w^-1 on alpha and beta."""
    alpha, beta = _std((ALPHA, 1)), _std((BETA, 1))
    return w * alpha * ~w, w * beta * ~w


def parse_images(alpha_text: str, beta_text: str) -> Images:
    return parse_word(alpha_text, Alphabet.STD), parse_word(beta_text, Alphabet.STD)


# -- automorphisms of the central quotient ------------------------------------------

def _single_syllable(w: FreeProductWord) -> Optional[Tuple[int, int]]:
    return w.syllables[0] if len(w.syllables) == 1 else None


def classify_quotient_auto(images: Dict[int, FreeProductWord],
                           budget: int = DEFAULT_SYLLABLE_BUDGET) -> QuotientAutoClass:
    """
    Find w and nu with phi = nu o iota_w for an automorphism of C2 * Cm or Ck * Z.

    images maps factor 1 (u) and factor 2 (v) to their images. nu is nu_r
    (u -> u, v -> v^r) on C2 * Cm and nu_{eps,r,s} (u -> u^r, v -> v^eps u^s)
    on Ck * Z.

    Raises:
        NotAutomorphismError: images do not have the shape of an automorphism
        BudgetExceededError: witness has more syllables than budget
    """
    u_image, v_image = images[1], images[2]
    orders = u_image.orders
    k = orders[0]
    if orders[1] == INFINITE:
        return _classify_ck_z(u_image, v_image, k, budget)
    if k != 2:
        raise NotAutomorphismError(f"unsupported free product with orders {orders}")
    return _classify_c2_cm(u_image, v_image, orders[1], budget)


def _check(u_image, v_image, nu: Dict[int, FreeProductWord], witness: FreeProductWord,
           budget: int):
    if len(witness) > budget:
        raise BudgetExceededError(f"witness has {len(witness)} syllables, budget is {budget}")
    u, v = fp_gen(1, witness.orders), fp_gen(2, witness.orders)
    if fp_apply(witness * u * ~witness, nu) != u_image or fp_apply(witness * v * ~witness, nu) != v_image:
        raise NotAutomorphismError("images are not an automorphism of the free product")


def _classify_c2_cm(u_image: FreeProductWord, v_image: FreeProductWord, m: int,
                    budget: int) -> QuotientAutoClass:
    orders = u_image.orders
    u = fp_gen(1, orders)
    p, core = fp_cyclic_reduce(u_image)
    if core != u:
        raise NotAutomorphismError(f"image of u is not conjugate to u: {fp_text(u_image)}")
    v_shifted = ~p * v_image * p
    q, core = fp_cyclic_reduce(v_shifted)
    single = _single_syllable(core)
    if single is None or single[0] != 2 or math.gcd(single[1], m) != 1:
        raise NotAutomorphismError(f"image of v is not conjugate to a generator of Cm: {fp_text(v_image)}")
    if q.syllables not in ((), ((1, 1),)):
        raise NotAutomorphismError("v is not in the image")
    r = single[1]
    eps = len(q.syllables)
    nu = {1: u, 2: fp_gen(2, orders, r)}
    nu_inverse = {1: u, 2: fp_gen(2, orders, pow(r, -1, m))}
    witness = fp_apply(p, nu_inverse) * u ** eps
    _check(u_image, v_image, nu, witness, budget)
    return QuotientAutoClass(witness, r)


def _classify_ck_z(u_image: FreeProductWord, v_image: FreeProductWord, k: int,
                   budget: int) -> QuotientAutoClass:
    orders = u_image.orders
    u, v = fp_gen(1, orders), fp_gen(2, orders)
    p, core = fp_cyclic_reduce(u_image)
    single = _single_syllable(core)
    if single is None or single[0] != 1 or math.gcd(single[1], k) != 1:
        raise NotAutomorphismError(f"image of u is not conjugate to a generator of Ck: {fp_text(u_image)}")
    r = single[1]
    syllables = list((~p * v_image * p).syllables)
    n0 = syllables.pop(0)[1] if syllables and syllables[0][0] == 1 else 0
    n1 = syllables.pop()[1] if syllables and syllables[-1][0] == 1 else 0
    if len(syllables) != 1 or syllables[0][1] not in (1, -1):
        raise NotAutomorphismError(f"image of v has no single v^(+-1) syllable: {fp_text(v_image)}")
    eps = syllables[0][1]
    s = (n0 + n1) % k
    r_inverse = pow(r, -1, k)
    nu = {1: u ** r, 2: v ** eps * u ** s}
    if eps == 1:
        v_preimage = v * u ** (-s * r_inverse)
    else:
        v_preimage = u ** (s * r_inverse) * ~v
    nu_inverse = {1: u ** r_inverse, 2: v_preimage}
    witness = fp_apply(p * u ** n0, nu_inverse)
    _check(u_image, v_image, nu, witness, budget)
    return QuotientAutoClass(witness, r, eps, s)


# -- random descriptors ---------------------------------------------------------------

def random_ab_word(length: int, rng: random.Random) -> FreeWord:
    letters = [(rng.choice((A_SYM, B_SYM)), rng.choice((1, -1))) for _ in range(length)]
    return FreeWord(Alphabet.AB, tuple(letters))


def random_descriptor(group: Rank2Group, rng: random.Random, witness_length: int = 4,
                      max_eta: int = 5) -> AutoDescriptor:
    witness = group.lift(group.quotient_image(random_ab_word(witness_length, rng)))
    if group.odd:
        return AutoDescriptor(witness, rng.randint(0, 1))
    return AutoDescriptor(witness, rng.randint(0, 1), rng.randint(0, 1), rng.randint(-max_eta, max_eta))


def descriptors_equivalent(group: Rank2Group, d1: AutoDescriptor, d2: AutoDescriptor) -> bool:
    """Same outer class and inner witnesses equal up to the center."""
    return ((d1.e_eps, d1.e_tau, d1.e_eta) == (d2.e_eps, d2.e_tau, d2.e_eta)
            and group.quotient_image(d1.inner_witness) == group.quotient_image(d2.inner_witness))


# -- relation closure oracle ------------------------------------------------------------

_A, _B = 1, 2


def _encode(w: FreeWord) -> Tuple[int, ...]:
    return tuple((_A if symbol.family is Family.A else _B) * sign for symbol, sign in w.letters)


def _decode(code: Sequence[int]) -> FreeWord:
    return FreeWord(Alphabet.AB, tuple((A_SYM if abs(c) == _A else B_SYM, 1 if c > 0 else -1) for c in code))


def _free_reduce(code: Sequence[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in code:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _relator(group: Rank2Group) -> Tuple[int, ...]:
    if group.odd:
        return (_A,) * group.m + (-_B, -_B)
    return (_A,) * group.k + (_B,) + (-_A,) * group.k + (-_B,)


def relator_pieces(group: Rank2Group) -> Dict[Tuple[int, ...], List[Tuple[int, ...]]]:
    """
    Substitutions u -> v with u v^-1 a cyclic conjugate of the relator or its inverse.

    Includes the empty u (insertion of a relator) and the empty v (deletion).
    """
    relator = _relator(group)
    inverse = tuple(-c for c in reversed(relator))
    length = len(relator)
    pieces: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for word in (relator, inverse):
        for shift in range(length):
            rotated = word[shift:] + word[:shift]
            for split in range(length + 1):
                u = rotated[:split]
                v = tuple(-c for c in reversed(rotated[split:]))
                targets = pieces.setdefault(u, [])
                if v not in targets:
                    targets.append(v)
    return pieces


def _rewrites(code: Tuple[int, ...], pieces, widths: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    for start in range(len(code) + 1):
        for width in widths:
            if start + width > len(code):
                break
            for v in pieces.get(code[start:start + width], ()):
                yield _free_reduce(code[:start] + v + code[start + width:])


def ab_words(max_length: int) -> Iterator[FreeWord]:
    """Reduced a,b words of length <= max_length, length-lexicographic."""
    letters = (_A, -_A, _B, -_B)
    layer: List[Tuple[int, ...]] = [()]
    for length in range(max_length + 1):
        for code in layer:
            yield _decode(code)
        layer = [code + (c,) for code in layer for c in letters if not code or code[-1] != -c]


def relation_closure_classes(group: Rank2Group, max_length: int, cap: int = 128) -> List[List[FreeWord]]:
    """
    Classes of reduced words of length <= max_length joined by relator substitutions.

    Each search explores at most cap words of length <= max_length plus the
    relator length; classes may therefore split a true equality class, but
    never join two different elements.
    """
    pieces = relator_pieces(group)
    widths = sorted({len(u) for u in pieces})
    bound = max_length + len(_relator(group))
    codes = [_encode(w) for w in ab_words(max_length)]
    index = {code: position for position, code in enumerate(codes)}
    parent = list(range(len(codes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for position, root in enumerate(codes):
        seen = {root}
        queue = deque([root])
        while queue and len(seen) < cap:
            current = queue.popleft()
            for neighbor in _rewrites(current, pieces, widths):
                if neighbor in seen or len(neighbor) > bound:
                    continue
                seen.add(neighbor)
                queue.append(neighbor)
                other = index.get(neighbor)
                if other is not None:
                    parent[find(other)] = find(position)
                if len(seen) >= cap:
                    break
    classes: Dict[int, List[FreeWord]] = {}
    for position, code in enumerate(codes):
        classes.setdefault(find(position), []).append(_decode(code))
    logger.debug("m=%d: %d words in %d closure classes", group.m, len(codes), len(classes))
    return list(classes.values())
