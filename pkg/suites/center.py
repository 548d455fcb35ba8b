"""
ArtinBD Toolkit - Center suite
License: MIT

The center generator of each flavor commutes with every generator of the
group and with random elements.
"""

import random
from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import BraidWord
from groups.semidirect import (FlavorTag, GroupFlavor, center_element, commutes, element_text,
                               fiber_element, random_element, section)

DEFAULT_RANGES = {
    FlavorTag.ARTIN_B: range(3, 6),
    FlavorTag.ARTIN_D: range(4, 7),
    FlavorTag.K_SEMIDIRECT: range(3, 6),
}
RANDOM_ELEMENTS = 20


class CenterSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'center',
            'description': 'u0 zeta, delta zeta and delta^2 zeta^2 are central',
            'category': 'semidirect',
        })
        self.add_option('FLAVOR', 'B, D or K; all when empty')
        self.add_option('N', 'Rank; default ranges when empty')

    def _case(self, tag: FlavorTag, n: int, seed: int):
        def check():
            flavor = GroupFlavor(tag, n)
            z = center_element(flavor)
            others = [fiber_element(flavor, gen) for gen in flavor.rep.fiber_generators()]
            others += [section(BraidWord(n, ((i, 1),)), flavor) for i in range(1, n)]
            rng = random.Random(f"{seed}-center-{tag.value}-{n}")
            others += [random_element(flavor, rng) for _ in range(RANDOM_ELEMENTS)]
            failures = [f"{element_text(z)} does not commute with {element_text(e)}"
                        for e in others if not commutes(z, e)]
            return len(others), failures
        return f"{tag.value} n={n}", check

    def run(self) -> Dict[str, Any]:
        tags = [FlavorTag.from_name(self.flavor)] if self.flavor else list(DEFAULT_RANGES)
        seed = self.int_option('SEED')
        cases = [self._case(tag, n, seed) for tag in tags for n in self.ints_or('N', DEFAULT_RANGES[tag])]
        checked, failures = self.run_cases(cases)
        return self.result({'flavor': self.flavor or 'all', 'n': self.int_option('N') or 'default'},
                           checked, failures)
