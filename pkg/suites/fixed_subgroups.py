"""
ArtinBD Toolkit - Fixed subgroup suite
License: MIT

For every cut set, a K-word is fixed by the kept generators exactly when it
lies in the subgroup generated by the block deltas, and invariance up to
conjugacy under the kept generators yields a conjugate in that subgroup. The
same holds for a single generator a_j with x_j x_{j+1} and the other x_i.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import BraidWord
from groups.fixed_conjugacy import (CutSet, WordKind, enumerate_words, in_fixed_subgroup,
                                    in_single_fixed_subgroup, is_fixed,
                                    single_invariant_has_fixed_representative,
                                    t_invariant_has_fixed_conjugate)
from groups.involutive_products import k_text
from groups.representations import RepKind, representation

DEFAULT_LENGTH = 8


class FixedSubgroupsSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'fixed-subgroups',
            'description': 'Fixed subgroups of generator sets acting on K',
            'category': 'fixed-conjugacy',
        })
        self.add_option('N', 'Number of strands; 3 and 4 when empty')
        self.add_option('LEN', 'Maximum K-word length', str(DEFAULT_LENGTH))

    def _case(self, n: int, max_length: int):
        def check():
            rep = representation(RepKind.RHO_PLUS, n)
            generators = {j: BraidWord(n, ((j, 1),)) for j in range(1, n)}
            cut_sets = CutSet.all_for(n)
            failures = []
            checked = 0
            for w in enumerate_words(WordKind.K_WORDS, n, max_length, self.settings.max_enumeration):
                fixed = {j: is_fixed(w, rep, gamma) for j, gamma in generators.items()}
                for c in cut_sets:
                    checked += 1
                    by_kept = all(fixed[j] for j in c.kept())
                    if by_kept != in_fixed_subgroup(w, c):
                        failures.append(f"{k_text(w)} cuts={c.cuts} fixed={by_kept}")
                    if not t_invariant_has_fixed_conjugate(w, c):
                        failures.append(f"{k_text(w)} cuts={c.cuts} has no fixed conjugate")
                for j in generators:
                    checked += 1
                    if fixed[j] != in_single_fixed_subgroup(w, j):
                        failures.append(f"{k_text(w)} a{j} fixed={fixed[j]}")
                    if not single_invariant_has_fixed_representative(w, j):
                        failures.append(f"{k_text(w)} a{j} has no fixed shortest representative")
            return checked, failures
        return f"n={n} len<={max_length}", check

    def run(self) -> Dict[str, Any]:
        max_length = self.int_option('LEN')
        cases = [self._case(n, max_length) for n in self.ints_or('N', (3, 4))]
        checked, failures = self.run_cases(cases)
        return self.result({'n': self.int_option('N') or '3,4', 'len': max_length}, checked, failures)
