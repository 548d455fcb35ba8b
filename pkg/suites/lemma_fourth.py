"""
ArtinBD Toolkit - Two-variable identity suite
License: MIT

No nontrivial reduced word w(s, t) up to the length bound satisfies
w(x, xy) w(y, xy) = 1 in the free group on x, y.
"""

from typing import Any, Dict

from core.modules import VerificationSuite
from groups.fixed_conjugacy import WordKind, enumerate_words
from groups.free_words import FreeWord, apply_endomorphism, lemma_fourth_eval, word_text
from groups.symbols import Alphabet, Family, GenSym

S_T_IMAGES = {
    GenSym(Family.U, 1): FreeWord.gen(Alphabet.ST, Family.S),
    GenSym(Family.U, 2): FreeWord.gen(Alphabet.ST, Family.T),
}


class LemmaFourthSuite(VerificationSuite):

    def __init__(self, settings=None):
        super().__init__(settings)
        self.info.update({
            'name': 'lemma-fourth',
            'description': 'w(x, xy) w(y, xy) = 1 has no nontrivial short solution',
            'category': 'free-words',
        })
        self.add_option('LEN', 'Maximum word length', str(self.settings.f_words_max_length))

    def _case(self, max_length: int):
        def check():
            failures = []
            checked = 0
            for word in enumerate_words(WordKind.F_WORDS, 2, max_length, self.settings.max_enumeration):
                if word.is_identity():
                    continue
                w = apply_endomorphism(word, S_T_IMAGES, Alphabet.ST)
                checked += 1
                _, trivial = lemma_fourth_eval(w)
                if trivial:
                    failures.append(word_text(w))
            return checked, failures
        return f"len<={max_length}", check

    def run(self) -> Dict[str, Any]:
        max_length = self.int_option('LEN')
        checked, failures = self.run_cases([self._case(max_length)])
        return self.result({'len': max_length}, checked, failures)
