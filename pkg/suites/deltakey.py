"""
ArtinBD Toolkit - Delta key suite
License: MIT

Exhaustive over reduced K-words: w is conjugate to its image under every
standard braid generator exactly when w is conjugate to a power of delta, and
w is fixed by every braid exactly when w is a power of delta.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.fixed_conjugacy import (WordKind, braid_invariant_classify, conj_to_delta_power,
                                    enumerate_words, fixed_by_all)
from groups.involutive_products import InvolutiveWord, delta_word, k_text
from groups.representations import RepKind, representation


def is_delta_power(w: InvolutiveWord) -> bool:
    n = w.n
    if len(w) % n:
        return False
    k = len(w) // n
    delta = delta_word(n)
    return w == delta ** k or w == delta ** -k


class DeltakeySuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'deltakey',
            'description': 'Braid-invariant K-words are conjugate to powers of delta',
            'category': 'fixed-conjugacy',
        })
        self.add_option('N', 'Number of strands', '3')
        self.add_option('LEN', 'Maximum K-word length', str(self.settings.k_words_max_length))

    def _case(self, n: int, max_length: int):
        def check():
            rep = representation(RepKind.RHO_PLUS, n)
            failures = []
            checked = 0
            for w in enumerate_words(WordKind.K_WORDS, n, max_length, self.settings.max_enumeration):
                checked += 1
                invariant = braid_invariant_classify(w, rep)
                if invariant != (conj_to_delta_power(w) is not None):
                    failures.append(f"{k_text(w)} invariant={invariant}")
                if fixed_by_all(w, rep) != is_delta_power(w):
                    failures.append(f"{k_text(w)} fixed={fixed_by_all(w, rep)}")
            return checked, failures
        return f"n={n} len<={max_length}", check

    def run(self) -> Dict[str, Any]:
        n, max_length = self.int_option('N'), self.int_option('LEN')
        checked, failures = self.run_cases([self._case(n, max_length)])
        return self.result({'n': n, 'len': max_length}, checked, failures)
