"""
ArtinBD Toolkit - Special automorphism suite
License: MIT

eps_n and tau_n are involutive homomorphisms, and tau_n on A(D_n) agrees with
conjugation by x1 inside K x| B_n.
"""

import random
from typing import Any, Dict

from core.modules import VerificationSuite
from groups.semidirect import (FlavorTag, GroupFlavor, element_text, eps_n, fiber_element, random_element,
                               sd_equal, tau_n, to_ksemidirect)
from groups.involutive_products import x

DEFAULT_RANGES = {
    FlavorTag.ARTIN_B: range(3, 7),
    FlavorTag.ARTIN_D: range(4, 7),
    FlavorTag.K_SEMIDIRECT: range(3, 7),
}
ELEMENTS = 200


class SpecialAutosSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'special-autos',
            'description': 'eps_n and tau_n are involutions; tau_n is conjugation by x1',
            'category': 'semidirect',
        })
        self.add_option('FLAVOR', 'B, D or K; all when empty')
        self.add_option('N', 'Rank; default ranges when empty')

    def _case(self, tag: FlavorTag, n: int, seed: int, count: int):
        def check():
            flavor = GroupFlavor(tag, n)
            rng = random.Random(f"{seed}-special-{tag.value}-{n}")
            maps = [('eps_n', eps_n)] + ([] if tag is FlavorTag.ARTIN_B else [('tau_n', tau_n)])
            failures = []
            checked = 0
            for _ in range(count):
                e1, e2 = random_element(flavor, rng, 3, 3), random_element(flavor, rng, 3, 3)
                for name, auto in maps:
                    checked += 1
                    if not sd_equal(auto(auto(e1)), e1):
                        failures.append(f"{name}^2 moves {element_text(e1)}")
                    if not sd_equal(auto(e1 * e2), auto(e1) * auto(e2)):
                        failures.append(f"{name} not multiplicative on {element_text(e1)}, {element_text(e2)}")
                if tag is FlavorTag.ARTIN_D:
                    checked += 1
                    embedded = to_ksemidirect(e1)
                    x1 = fiber_element(embedded.flavor, x(1, n))
                    if not sd_equal(to_ksemidirect(tau_n(e1)), x1 * embedded * x1):
                        failures.append(f"tau_n differs from x1-conjugation on {element_text(e1)}")
            return checked, failures
        return f"{tag.value} n={n}", check

    def run(self) -> Dict[str, Any]:
        tags = [FlavorTag.from_name(self.flavor)] if self.flavor else list(DEFAULT_RANGES)
        seed = self.int_option('SEED')
        count = min(ELEMENTS, self.int_option('SAMPLES'))
        cases = [self._case(tag, n, seed, count) for tag in tags for n in self.ints_or('N', DEFAULT_RANGES[tag])]
        checked, failures = self.run_cases(cases)
        return self.result({'flavor': self.flavor or 'all', 'n': self.int_option('N') or 'default',
                            'elements': count}, checked, failures)
