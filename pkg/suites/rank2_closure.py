"""
ArtinBD Toolkit - Rank-2 normal form suite
License: MIT

The central normal form is constant on classes of the bounded relator
rewriting closure, and it separates exactly the words that the quotient image
and abelian class separate.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.free_words import word_text
from groups.rank2 import Rank2Group, ab_words, relation_closure_classes


class Rank2ClosureSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'rank2-closure',
            'description': 'Normal forms agree with relator rewriting and the separation oracle',
            'category': 'rank2',
        })
        self.add_option('M', 'Edge label; 3..6 when empty')
        self.add_option('LEN', 'Maximum a,b word length', str(self.settings.closure_length))

    def _case(self, m: int, max_length: int):
        def check():
            group = Rank2Group(m, self.settings.syllable_budget)
            failures = []
            checked = 0

            classes = relation_closure_classes(group, max_length, self.settings.closure_cap)
            forms_seen = set()
            for words in classes:
                forms = {group.normal_form(w) for w in words}
                checked += len(words)
                if len(forms) > 1:
                    failures.append(f"closure class of {word_text(words[0])} has {len(forms)} normal forms")
                forms_seen.update(forms)
            self.logger.info("m=%d: %d closure classes, %d normal forms", m, len(classes), len(forms_seen))

            by_form, by_signature = {}, {}
            for w in ab_words(max_length):
                form = group.normal_form(w)
                signature = (group.quotient_image(w), group.abelian_invariant(w))
                checked += 1
                if by_form.setdefault(form, signature) != signature:
                    failures.append(f"{word_text(w)}: equal normal forms, different separation data")
                if by_signature.setdefault(signature, form) != form:
                    failures.append(f"{word_text(w)}: equal separation data, different normal forms")
                if not group.separated_equal(group.nf_word(form), w):
                    failures.append(f"{word_text(w)}: normal form word is not equal to the input")
            return checked, failures
        return f"m={m}", check

    def run(self) -> Dict[str, Any]:
        max_length = self.int_option('LEN')
        cases = [self._case(m, max_length) for m in self.ints_or('M', range(3, 7))]
        checked, failures = self.run_cases(cases)
        return self.result({'m': self.int_option('M') or '3..6', 'len': max_length}, checked, failures)
