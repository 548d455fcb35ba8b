"""
ArtinBD Toolkit - Presentation isomorphism suite
License: MIT

phi and psi are mutually inverse between the Artin presentations of A(B_n),
A(D_n) and their semidirect coordinates, and phi respects every defining
relation.
"""

import random
from typing import Any, Dict

from core.modules import VerificationSuite
from groups.braids import BraidWord
from groups.semidirect import (FlavorTag, GroupFlavor, element_text, fiber_element, phi, phi_images,
                               psi, random_element, random_presentation_word, relation_pairs, sd_equal,
                               section, verify_presentation)
from groups.free_words import word_text

DEFAULT_RANGES = {FlavorTag.ARTIN_B: range(3, 7), FlavorTag.ARTIN_D: range(4, 7)}


class PhiPsiSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'phi-psi',
            'description': 'phi o psi = id, psi o phi = id and phi respects the Artin relations',
            'category': 'semidirect',
        })
        self.add_option('FLAVOR', 'B or D; both when empty')
        self.add_option('N', 'Rank; default ranges when empty')

    def _case(self, tag: FlavorTag, n: int, samples: int, seed: int):
        def check():
            flavor = GroupFlavor(tag, n)
            failures = []
            checked = 0

            if not verify_presentation(phi_images(flavor), relation_pairs(flavor)):
                failures.append('phi does not respect the defining relations')
            checked += 1

            generators = [fiber_element(flavor, gen) for gen in flavor.rep.fiber_generators()]
            generators += [section(BraidWord(n, ((i, 1),)), flavor) for i in range(1, n)]
            rng = random.Random(f"{seed}-{tag.value}-{n}")
            elements = generators + [random_element(flavor, rng) for _ in range(samples)]
            for e in elements:
                checked += 1
                if not sd_equal(phi(psi(e), flavor), e):
                    failures.append(f"phi(psi(e)) != e for e = {element_text(e)}")

            for _ in range(samples):
                word = random_presentation_word(flavor, 6, rng)
                checked += 1
                image = phi(word, flavor)
                if not sd_equal(phi(psi(image), flavor), image):
                    failures.append(f"psi(phi(w)) != w for w = {word_text(word)}")
            return checked, failures
        return f"{tag.value} n={n}", check

    def run(self) -> Dict[str, Any]:
        tags = [FlavorTag.from_name(self.flavor)] if self.flavor else list(DEFAULT_RANGES)
        samples, seed = self.int_option('SAMPLES'), self.int_option('SEED')
        cases = [self._case(tag, n, samples, seed)
                 for tag in tags for n in self.ints_or('N', DEFAULT_RANGES[tag])]
        checked, failures = self.run_cases(cases)
        params = {'flavor': self.flavor or 'all', 'n': self.int_option('N') or 'default', 'samples': samples}
        return self.result(params, checked, failures)
