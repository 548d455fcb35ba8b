"""
ArtinBD Toolkit - Beta realization suite
License: MIT

beta0 = (a1 a2 a3)^2 sends g_i to g_i^-1 g1 g3 in B_4, and for odd n the chain
beta = a1 ... a_{n-2} shifts g_i to g_{i+1} while fixing x = g1 g3 ... g_{n-2}
and delta^2.
"""

from typing import Any, Dict, List

from core.modules import VerificationSuite
from groups.braids import beta0, beta_chain
from groups.free_words import FreeWord, word_text
from groups.representations import (RepKind, apply, beta_shift_images, odd_fixed_words,
                                    representation)
from groups.symbols import Alphabet, Family


def _g(i: int) -> FreeWord:
    return FreeWord.gen(Alphabet.G, Family.G, i)


class BetaRealizationSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'beta-realization',
            'description': 'beta0 and the chain beta act on g-words as prescribed',
            'category': 'representations',
        })
        self.add_option('N', 'Odd number of strands for the chain; 5 and 7 when empty')

    @staticmethod
    def _beta0_failures() -> List[str]:
        rep = representation(RepKind.RHO_D_G, 4)
        pair = _g(1) * _g(3)
        failures = []
        for i in range(1, 4):
            image = apply(rep, beta0(), _g(i))
            if image != ~_g(i) * pair:
                failures.append(f"beta0(g{i}) = {word_text(image)}")
        return failures

    def _chain_case(self, n: int):
        def check():
            rep = representation(RepKind.RHO_D_G, n)
            beta = beta_chain(n)
            failures = []
            shifts = beta_shift_images(n)
            for i, expected in shifts.items():
                image = apply(rep, beta, _g(i))
                if image != expected:
                    failures.append(f"beta(g{i}) = {word_text(image)}")
            x_word, _, z_word = odd_fixed_words(n)
            for name, w in (('x', x_word), ('delta^2', z_word)):
                if apply(rep, beta, w) != w:
                    failures.append(f"beta moves {name}")
            return len(shifts) + 2, failures
        return f"chain n={n}", check

    def run(self) -> Dict[str, Any]:
        cases = [('beta0 n=4', lambda: (3, self._beta0_failures()))]
        cases += [self._chain_case(n) for n in self.ints_or('N', (5, 7))]
        checked, failures = self.run_cases(cases)
        return self.result({'n': self.int_option('N') or '5,7'}, checked, failures)
