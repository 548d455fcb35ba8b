"""
ArtinBD Toolkit - x0 suite
License: MIT

The v-word x0 is fixed by every standard generator under rhoD.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.free_words import word_text
from groups.representations import RepKind, apply, representation, standard_generators
from groups.semidirect import x0_word


class X0FixedSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'x0-fixed',
            'description': 'x0 is fixed by every rhoD(a_i)',
            'category': 'representations',
        })
        self.add_option('N', 'Number of strands; 4..6 when empty')

    def _case(self, n: int):
        def check():
            rep = representation(RepKind.RHO_D_V, n)
            x0 = x0_word(n)
            failures = [f"a{i}(x0) = {word_text(apply(rep, gamma, x0))}"
                        for i, gamma in enumerate(standard_generators(n), start=1)
                        if apply(rep, gamma, x0) != x0]
            return n - 1, failures
        return f"n={n}", check

    def run(self) -> Dict[str, Any]:
        checked, failures = self.run_cases([self._case(n) for n in self.ints_or('N', range(4, 7))])
        return self.result({'n': self.int_option('N') or '4..6'}, checked, failures)
