"""
ArtinBD Toolkit - Braid relation suite
License: MIT

The generator tables of every representation satisfy the braid relations, and
the inverse tables undo the forward tables.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.representations import RepKind, inverse_tables_consistent, representation, verify_braid_relations

DEFAULT_RANGES = {
    RepKind.RHO_B: range(3, 7),
    RepKind.RHO_D_V: range(4, 7),
    RepKind.RHO_D_G: range(4, 7),
    RepKind.RHO_PLUS: range(3, 7),
}


class BraidRelationsSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'braid-relations',
            'description': 'Braid relations and inverse tables for rhoB, rhoDv, rhoDg, rhoPlus',
            'category': 'representations',
        })
        self.add_option('REP', 'Representation (rhoB, rhoDv, rhoDg, rhoPlus); all when empty')
        self.add_option('N', 'Number of strands; default ranges when empty')

    def _case(self, kind: RepKind, n: int):
        def check():
            rep = representation(kind, n)
            failures = []
            if not verify_braid_relations(rep):
                failures.append('braid relations fail')
            if not inverse_tables_consistent(rep):
                failures.append('inverse tables inconsistent')
            return 2, failures
        return f"{kind.value} n={n}", check

    def run(self) -> Dict[str, Any]:
        kinds = [RepKind.from_name(self.rep)] if self.rep else list(DEFAULT_RANGES)
        cases = [self._case(kind, n) for kind in kinds for n in self.ints_or('N', DEFAULT_RANGES[kind])]
        checked, failures = self.run_cases(cases)
        params = {'rep': self.rep or 'all', 'n': self.int_option('N') or 'default'}
        return self.result(params, checked, failures)
