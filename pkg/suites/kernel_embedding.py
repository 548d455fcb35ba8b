"""
ArtinBD Toolkit - Kernel embedding suite
License: MIT

The g-basis embedding of F_{n-1} into K is braid-equivariant, lands in the
parity kernel, is inverted by express_in_g and agrees with the v-basis
embedding through the change of basis.
"""

import random
from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import braid_text, random_braid
from groups.free_words import FreeWord, word_text
from groups.involutive_products import basis_change_v_g, embed_g, embed_v, express_in_g, kappa
from groups.representations import compat_embed, standard_generators
from groups.symbols import Alphabet, Family, GenSym

WORD_LENGTH = 6


def _random_word(alphabet: Alphabet, rank: int, rng: random.Random) -> FreeWord:
    family = alphabet.families[0]
    return FreeWord(alphabet, tuple((GenSym(family, rng.randint(1, rank)), rng.choice((1, -1)))
                                    for _ in range(WORD_LENGTH)))


class KernelEmbeddingSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'kernel-embedding',
            'description': 'F_{n-1} embeds equivariantly into the parity kernel of K',
            'category': 'involutive-products',
        })
        self.add_option('N', 'Number of strands; 4..6 when empty')

    def _case(self, n: int, seed: int, samples: int):
        def check():
            rng = random.Random(f"{seed}-embed-{n}")
            failures = []
            checked = 0
            braids = standard_generators(n) + [random_braid(n, 4, rng) for _ in range(10)]
            for _ in range(samples):
                g_word = _random_word(Alphabet.G, n - 1, rng)
                v_word = _random_word(Alphabet.V, n - 1, rng)
                image = embed_g(g_word, n)
                checked += 1
                if kappa(image) != 0 or express_in_g(image) != g_word:
                    failures.append(f"embed_g({word_text(g_word)}) does not round trip")
                if embed_v(v_word, n) != embed_g(basis_change_v_g(v_word), n):
                    failures.append(f"embed_v({word_text(v_word)}) disagrees with embed_g")
                b = rng.choice(braids)
                if not compat_embed(b, g_word, n):
                    failures.append(f"embedding not equivariant for {braid_text(b)} on {word_text(g_word)}")
            return checked, failures
        return f"n={n}", check

    def run(self) -> Dict[str, Any]:
        seed, samples = self.int_option('SEED'), self.int_option('SAMPLES')
        cases = [self._case(n, seed, samples) for n in self.ints_or('N', range(4, 7))]
        checked, failures = self.run_cases(cases)
        return self.result({'n': self.int_option('N') or '4..6', 'samples': samples}, checked, failures)
