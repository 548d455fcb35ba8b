"""
ArtinBD Toolkit - Rank-2 automorphism suite
License: MIT

Relations among eps, tau and eta, growth of eta powers, classification round
trips through random descriptors and the outer classes realized for odd m.
"""

import random
from typing import Any, Dict, List

from core.modules import VerificationSuite
from groups.errors import GroupError
from groups.free_words import word_text
from groups.rank2 import Rank2Group, descriptors_equivalent, inner_images, random_ab_word, random_descriptor

ROUND_TRIPS = 200
GROWTH_STEPS = 10
ODD_PRODUCTS = 50


class Rank2OutSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'rank2-out',
            'description': 'eps, tau, eta relations and automorphism classification round trips',
            'category': 'rank2',
        })
        self.add_option('M', 'Edge label; 3..6 when empty')

    def _relations(self, group: Rank2Group) -> List[str]:
        failures = []
        identity = group.identity_images()
        eps, tau = group.special_images('eps'), group.special_images('tau')
        delta_conj = group.special_images('delta_conj')

        for name in ('eps', 'tau', 'delta_conj') + (() if group.odd else ('eta', 'eta_inv')):
            if not group.preserves_relation(group.special_images(name)):
                failures.append(f"{name} does not preserve the relation")
        if not group.images_equal(group.power(eps, 2), identity):
            failures.append('eps^2 != id')
        if not group.images_equal(group.power(tau, 2), identity):
            failures.append('tau^2 != id')
        if not group.images_equal(group.compose(eps, tau), group.compose(tau, eps)):
            failures.append('eps and tau do not commute')

        if group.odd:
            if not group.images_equal(tau, delta_conj):
                failures.append('tau is not conjugation by Delta')
            return failures

        eta, eta_inv = group.special_images('eta'), group.special_images('eta_inv')
        if not group.images_equal(delta_conj, identity):
            failures.append('Delta is not central')
        if not group.images_equal(group.compose(eta, eta_inv), identity):
            failures.append('eta o eta_inv != id')
        if not group.images_equal(group.compose(tau, eta, tau), eta_inv):
            failures.append('tau eta tau != eta^-1')
        if not group.images_equal(group.compose(eps, eta), group.compose(eta, eps)):
            failures.append('eps and eta do not commute')
        return failures

    def _growth(self, group: Rank2Group) -> List[str]:
        """eta^t(b) = b a^t: its a-coordinate is t and eta^t(beta) has length 2t + 1."""
        failures = []
        eta = group.special_images('eta')
        b = group.std_to_ab(group.identity_images()[1])
        images = group.identity_images()
        for t in range(1, GROWTH_STEPS + 1):
            images = group.compose(eta, images)
            a_coordinate = group.abelian_invariant(group.apply_images(images, b))[0]
            if a_coordinate != t:
                failures.append(f"eta^{t}(b) has a-coordinate {a_coordinate}")
            if len(images[1]) != 2 * t + 1:
                failures.append(f"eta^{t}(beta) = {word_text(images[1])} has length {len(images[1])}")
        return failures

    def _round_trips(self, group: Rank2Group, rng: random.Random, count: int) -> List[str]:
        failures = []
        for _ in range(count):
            descriptor = random_descriptor(group, rng)
            images = group.build_auto(descriptor)
            try:
                found = group.classify_auto(images)
            except GroupError as e:
                failures.append(f"{descriptor}: {e}")
                continue
            if not descriptors_equivalent(group, descriptor, found):
                failures.append(f"{descriptor} classified as {found}")
        return failures

    def _odd_classes(self, group: Rank2Group, rng: random.Random) -> List[str]:
        """Products of eps, tau, Delta-conjugation and inner maps only realize id and eps."""
        failures = []
        realized = set()
        pool = [group.special_images(name) for name in ('eps', 'tau', 'delta_conj')]
        for _ in range(ODD_PRODUCTS):
            parts = [rng.choice(pool) for _ in range(3)]
            parts.append(inner_images(group.ab_to_std(random_ab_word(3, rng))))
            images = group.compose(*parts)
            try:
                found = group.classify_auto(images)
            except GroupError as e:
                failures.append(f"product not classified: {e}")
                continue
            realized.add((found.e_eps, found.e_tau, found.e_eta))
        for images in (group.identity_images(), group.special_images('eps')):
            found = group.classify_auto(images)
            realized.add((found.e_eps, found.e_tau, found.e_eta))
        if realized != {(0, 0, 0), (1, 0, 0)}:
            failures.append(f"realized outer classes {sorted(realized)}")
        return failures

    def _case(self, m: int, seed: int, count: int):
        def check():
            group = Rank2Group(m, self.settings.syllable_budget)
            rng = random.Random(f"{seed}-rank2-{m}")
            failures = self._relations(group)
            checked = 1
            if not group.odd:
                failures += self._growth(group)
                checked += GROWTH_STEPS
            failures += self._round_trips(group, rng, count)
            checked += count
            if group.odd:
                failures += self._odd_classes(group, rng)
                checked += ODD_PRODUCTS
            return checked, failures
        return f"m={m}", check

    def run(self) -> Dict[str, Any]:
        seed = self.int_option('SEED')
        count = min(ROUND_TRIPS, self.int_option('SAMPLES'))
        cases = [self._case(m, seed, count) for m in self.ints_or('M', range(3, 7))]
        checked, failures = self.run_cases(cases)
        return self.result({'m': self.int_option('M') or '3..6', 'round_trips': count}, checked, failures)
