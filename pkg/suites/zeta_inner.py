"""
ArtinBD Toolkit - Full twist suite
License: MIT

zeta acts on F_n as conjugation by u0^-1 and on K as conjugation by delta^-1;
u0 and delta are fixed by every braid, the length of zeta is n(n-1) and rhoB
acts on homology through the permutation image.
"""

import random
from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import length_hom, random_braid, zeta
from groups.free_words import FreeWord, word_text
from groups.involutive_products import InvolutiveWord, delta_word, k_text
from groups.representations import (RepKind, apply, check_equivariant, conjugation_images,
                                    homology_matrix, permutation_matrix, representation,
                                    standard_generators, substitute, u0_word)
from groups.symbols import Alphabet, Family, GenSym

WORD_LENGTH = 8


def _random_u_word(n: int, rng: random.Random) -> FreeWord:
    return FreeWord(Alphabet.U, tuple((GenSym(Family.U, rng.randint(1, n)), rng.choice((1, -1)))
                                      for _ in range(WORD_LENGTH)))


def _random_k_word(n: int, rng: random.Random) -> InvolutiveWord:
    return InvolutiveWord(n, tuple(rng.randint(1, n) for _ in range(WORD_LENGTH)))


class ZetaInnerSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'zeta-inner',
            'description': 'zeta acts by conjugation with u0^-1 (F_n) and delta^-1 (K)',
            'category': 'representations',
        })
        self.add_option('N', 'Number of strands; 3..6 when empty')

    def _case(self, n: int, samples: int, seed: int):
        def check():
            failures = []
            checked = 0
            z = zeta(n)
            rng = random.Random(f"{seed}-zeta-{n}")

            checked += 1
            if length_hom(z) != n * (n - 1):
                failures.append(f"length of zeta is {length_hom(z)}")

            rho_b = representation(RepKind.RHO_B, n)
            u0 = u0_word(n)
            by_u0 = conjugation_images(~u0, rho_b)
            words = rho_b.fiber_generators() + [_random_u_word(n, rng) for _ in range(samples)]
            for w in words:
                checked += 1
                if apply(rho_b, z, w) != substitute(w, by_u0):
                    failures.append(f"rhoB(zeta)({word_text(w)}) is not u0^-1 w u0")

            rho_plus = representation(RepKind.RHO_PLUS, n)
            delta = delta_word(n)
            by_delta = conjugation_images(~delta, rho_plus)
            k_words = rho_plus.fiber_generators() + [_random_k_word(n, rng) for _ in range(samples)]
            for w in k_words:
                checked += 1
                if apply(rho_plus, z, w) != substitute(w, by_delta):
                    failures.append(f"rhoPlus(zeta)({k_text(w)}) is not delta^-1 w delta")

            for gamma in standard_generators(n):
                checked += 2
                if apply(rho_b, gamma, u0) != u0:
                    failures.append(f"u0 moved by {gamma}")
                if apply(rho_plus, gamma, delta) != delta:
                    failures.append(f"delta moved by {gamma}")

            checked += 1
            if not check_equivariant(conjugation_images(u0, rho_b), rho_b, standard_generators(n)):
                failures.append('conjugation by u0 is not braid-equivariant')

            for _ in range(samples):
                b = random_braid(n, 6, rng)
                checked += 1
                if homology_matrix(rho_b, b) != permutation_matrix(b):
                    failures.append(f"homology of rhoB({b}) is not its permutation matrix")
            return checked, failures
        return f"n={n}", check

    def run(self) -> Dict[str, Any]:
        samples, seed = self.int_option('SAMPLES'), self.int_option('SEED')
        cases = [self._case(n, samples, seed) for n in self.ints_or('N', range(3, 7))]
        checked, failures = self.run_cases(cases)
        return self.result({'n': self.int_option('N') or '3..6', 'samples': samples}, checked, failures)
