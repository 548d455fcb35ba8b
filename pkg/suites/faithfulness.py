"""
ArtinBD Toolkit - Faithfulness suite
License: MIT

Over all freely reduced braid words up to a length bound, rhoD (g-basis) acts
trivially exactly when rhoB does.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import braid_text
from groups.fixed_conjugacy import WordKind, enumerate_words
from groups.representations import RepKind, acts_trivially, representation


class FaithfulnessSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'faithfulness',
            'description': 'Kernels of rhoD and rhoB agree on bounded braid words',
            'category': 'representations',
        })
        self.add_option('N', 'Number of strands', '4')
        self.add_option('LEN', 'Maximum braid word length', str(self.settings.braid_words_max_length))

    def _case(self, n: int, max_length: int):
        def check():
            rho_d = representation(RepKind.RHO_D_G, n)
            rho_b = representation(RepKind.RHO_B, n)
            failures = []
            checked = 0
            for b in enumerate_words(WordKind.BRAID_WORDS, n, max_length, self.settings.max_enumeration):
                checked += 1
                in_d, in_b = acts_trivially(rho_d, b), acts_trivially(rho_b, b)
                if in_d != in_b:
                    failures.append(f"{braid_text(b)} trivial under rhoD={in_d}, rhoB={in_b}")
            return checked, failures
        return f"n={n} len<={max_length}", check

    def run(self) -> Dict[str, Any]:
        n, max_length = self.int_option('N'), self.int_option('LEN')
        checked, failures = self.run_cases([self._case(n, max_length)])
        return self.result({'n': n, 'len': max_length}, checked, failures)
