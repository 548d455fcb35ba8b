#!/usr/bin/env python3
"""
ArtinBD Toolkit - Free group word tests
License: MIT
"""

import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.errors import FamilyMismatchError, IndexRangeError, MissingImageError, WordParseError
from groups.free_words import (FreeWord, abelianize, apply_endomorphism, cyclic_reduce, invert,
                               is_conjugate, lemma_fourth_eval, match_axis_form, multiply,
                               parse_word, power_of, word_text)
from groups.symbols import Alphabet, Family, GenSym


def u(text: str) -> FreeWord:
    return parse_word(text, Alphabet.U)


def u_words(rank: int = 3, max_size: int = 8):
    letters = st.tuples(st.integers(1, rank), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_size).map(
        lambda raw: FreeWord(Alphabet.U, tuple((GenSym(Family.U, i), s) for i, s in raw)))


class TestReduction:

    @pytest.mark.parametrize("text,expected", [
        ("u1 u1^-1", "e"),
        ("u1 u2 u2^-1 u3", "u1 u3"),
        ("u2 u2^-1 u1 u2", "u1 u2"),
        ("e", "e"),
        ("u1^3 u1^-2", "u1"),
    ])
    def test_reduce(self, text, expected):
        assert word_text(u(text)) == expected

    def test_multiply_and_invert(self):
        assert multiply(u("u1"), u("u1^-1")).is_identity()
        assert word_text(invert(u("u1 u2"))) == "u2^-1 u1^-1"
        assert word_text(u("u1 u2") * u("u2^-1")) == "u1"

    def test_mixed_alphabets_rejected(self):
        with pytest.raises(FamilyMismatchError):
            multiply(u("u1"), parse_word("v1", Alphabet.V))

    @pytest.mark.parametrize("text", ["u0", "q1", "u", "u1^x"])
    def test_parse_errors(self, text):
        with pytest.raises(WordParseError):
            u(text)

    def test_parse_error_reports_column(self):
        with pytest.raises(WordParseError) as info:
            u("u1 u2 w3")
        assert info.value.column == 7

    @settings(deadline=None, max_examples=100)
    @given(u_words())
    def test_inverse_cancels(self, w):
        assert (w * ~w).is_identity()
        assert (~w * w).is_identity()

    @settings(deadline=None, max_examples=100)
    @given(u_words(), u_words(), u_words())
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestConjugacy:

    @pytest.mark.parametrize("text,conjugator,core", [
        ("u2 u1 u2^-1", "u2", "u1"),
        ("u1 u2", "e", "u1 u2"),
        ("u1 u2 u1^-1 u1 u1^-1", "u1", "u2"),
    ])
    def test_cyclic_reduce(self, text, conjugator, core):
        p, k = cyclic_reduce(u(text))
        assert word_text(p) == conjugator
        assert word_text(k) == core

    @pytest.mark.parametrize("first,second", [
        ("u1 u2", "u2 u1"),
        ("u1 u2 u1^-1", "u2"),
        ("u3 u1 u2", "u1 u2 u3"),
    ])
    def test_witness(self, first, second):
        w1, w2 = u(first), u(second)
        c = is_conjugate(w1, w2)
        assert c is not None
        assert c * w1 * ~c == w2

    def test_shift_witness_is_shortest_then_lexicographic(self):
        assert word_text(is_conjugate(u("u1 u2"), u("u2 u1"))) == "u1^-1"

    def test_not_conjugate(self):
        assert is_conjugate(u("u1"), u("u2")) is None
        assert is_conjugate(u("u1 u2"), u("u1 u2^-1")) is None

    @settings(deadline=None, max_examples=100)
    @given(u_words(), u_words(max_size=5))
    def test_conjugates_are_detected(self, w, c):
        target = c * w * ~c
        witness = is_conjugate(w, target)
        assert witness is not None
        assert witness * w * ~witness == target


class TestInvariants:

    @pytest.mark.parametrize("text,rank,expected", [
        ("u1 u2^-1 u1", 3, (2, -1, 0)),
        ("e", 2, (0, 0)),
        ("u1 u2 u3", 3, (1, 1, 1)),
    ])
    def test_abelianize(self, text, rank, expected):
        assert abelianize(u(text), rank).coords == expected

    def test_abelianize_rank_too_small(self):
        with pytest.raises(IndexRangeError):
            abelianize(u("u3"), 2)

    def test_abelian_addition(self):
        total = abelianize(u("u1"), 2) + abelianize(u("u2 u1"), 2)
        assert total.coords == (2, 1)

    @pytest.mark.parametrize("text,base,expected", [
        ("u1 u2 u1 u2", "u1 u2", 2),
        ("e", "u1", 0),
        ("u2 u1", "u1 u2", None),
        ("u2^-1 u1^-1", "u1 u2", -1),
        ("u3 u1 u1 u3^-1", "u3 u1 u3^-1", 2),
    ])
    def test_power_of(self, text, base, expected):
        assert power_of(u(text), u(base)) == expected


class TestEndomorphisms:

    def test_artin_generator_fixes_product(self):
        images = {GenSym(Family.U, 1): u("u2"), GenSym(Family.U, 2): u("u2^-1 u1 u2")}
        assert word_text(apply_endomorphism(u("u1 u2"), images)) == "u1 u2"

    def test_identity_and_conjugation(self):
        assert word_text(apply_endomorphism(u("u1"), {GenSym(Family.U, 1): u("u1")})) == "u1"
        image = apply_endomorphism(u("u1"), {GenSym(Family.U, 1): u("u1 u2 u1^-1")})
        assert word_text(image) == "u1 u2 u1^-1"

    def test_inverse_letters_map_to_inverse_images(self):
        images = {GenSym(Family.U, 1): u("u1 u2")}
        assert word_text(apply_endomorphism(u("u1^-1"), images)) == "u2^-1 u1^-1"

    def test_missing_image(self):
        with pytest.raises(MissingImageError):
            apply_endomorphism(u("u1 u2"), {GenSym(Family.U, 1): u("u2")})

    @pytest.mark.parametrize("text,expected", [
        ("y y x^-1 y", (2, -1, 1)),
        ("x", (0, 1, 0)),
        ("x y x", None),
        ("y^-3 x", (-3, 1, 0)),
    ])
    def test_axis_form(self, text, expected):
        assert match_axis_form(parse_word(text, Alphabet.XY)) == expected

    @pytest.mark.parametrize("text,product,trivial", [
        ("e", "e", True),
        ("s", "x y", False),
        ("s t^-1", "x y^-1 x^-1 x^-1", False),
    ])
    def test_lemma_fourth_eval(self, text, product, trivial):
        result, is_trivial = lemma_fourth_eval(parse_word(text, Alphabet.ST))
        assert word_text(result) == product
        assert is_trivial is trivial

    def test_lemma_fourth_needs_st_word(self):
        with pytest.raises(FamilyMismatchError):
            lemma_fourth_eval(u("u1"))
