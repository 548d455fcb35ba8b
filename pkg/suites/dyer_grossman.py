"""
ArtinBD Toolkit - Free group invariance suite
License: MIT

Exhaustive over reduced words of F_n under rhoB: a word conjugate to its image
under every a_i is conjugate to a power of u0 (and conversely), and a word
conjugate to its image under every a_i^2 is conjugate to a power of some u_j
or of u0.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import BraidWord
from groups.fixed_conjugacy import (WordKind, braid_invariant_classify, conj_to_u0_power,
                                    dyer_grossman_classify, enumerate_words)
from groups.free_words import FreeWord, is_conjugate, word_text
from groups.representations import Representation, RepKind, apply, representation


def square_invariant(w: FreeWord, rep: Representation) -> bool:
    """a_i^2(w) ~ w for every i."""
    return all(is_conjugate(apply(rep, BraidWord(rep.n, ((i, 1), (i, 1))), w), w) is not None
               for i in range(1, rep.n))


class DyerGrossmanSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'dyer-grossman',
            'description': 'Braid-invariant conjugacy classes of F_n are powers of u0 (or u_j for squares)',
            'category': 'fixed-conjugacy',
        })
        self.add_option('N', 'Rank of the free group', '3')
        self.add_option('LEN', 'Maximum word length', str(self.settings.f_words_max_length))

    def _case(self, n: int, max_length: int):
        def check():
            rep = representation(RepKind.RHO_B, n)
            failures = []
            checked = 0
            for w in enumerate_words(WordKind.F_WORDS, n, max_length, self.settings.max_enumeration):
                checked += 1
                invariant = braid_invariant_classify(w, rep)
                if invariant != (conj_to_u0_power(w, n) is not None):
                    failures.append(f"{word_text(w)} invariant={invariant}")
                listed = dyer_grossman_classify(w, n).kind != 'other'
                if square_invariant(w, rep) != listed:
                    failures.append(f"{word_text(w)} square-invariant={not listed}")
            return checked, failures
        return f"n={n} len<={max_length}", check

    def run(self) -> Dict[str, Any]:
        n, max_length = self.int_option('N'), self.int_option('LEN')
        checked, failures = self.run_cases([self._case(n, max_length)])
        return self.result({'n': n, 'len': max_length}, checked, failures)
