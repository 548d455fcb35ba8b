#!/usr/bin/env python3
"""
ArtinBD Toolkit - Fixed subgroup and conjugacy classification tests
License: MIT
"""

import os
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.braids import braid_text, parse_braid
from groups.errors import BudgetExceededError, IndexRangeError
from groups.fixed_conjugacy import (CutSet, WordKind, braid_invariant_classify, conj_to_delta_power,
                                    conj_to_u0_power, cyclic_shifts, dyer_grossman_classify,
                                    enumerate_words, enumeration_size, fixed_by_all, fixed_gens,
                                    in_fixed_subgroup, in_single_fixed_subgroup, is_cyclically_reduced,
                                    is_fixed, single_fixed_gens, single_invariant_has_fixed_representative,
                                    t_invariant_has_fixed_conjugate)
from groups.free_words import parse_word, word_text
from groups.involutive_products import delta_word, k_text, parse_k_word
from groups.representations import RepKind, representation
from groups.semidirect import x0_word
from groups.symbols import Alphabet


def k(text: str, n: int):
    return parse_k_word(text, n)


class TestCutSets:

    @pytest.mark.parametrize("n,cuts,expected", [
        (3, (1,), ["x1", "x2 x3"]),
        (4, (), ["x1 x2 x3 x4"]),
        (5, (2,), ["x1 x2", "x3 x4 x5"]),
    ])
    def test_fixed_gens(self, n, cuts, expected):
        assert [k_text(g) for g in fixed_gens(CutSet(n, cuts))] == expected

    def test_kept_and_all(self):
        assert CutSet(4, (2,)).kept() == [1, 3]
        assert len(CutSet.all_for(4)) == 8

    def test_invalid_cuts(self):
        with pytest.raises(IndexRangeError):
            CutSet(4, (2, 2))
        with pytest.raises(IndexRangeError):
            CutSet(4, (4,))

    def test_fixed_gens_are_fixed_by_kept_generators(self):
        rep = representation(RepKind.RHO_PLUS, 5)
        for cut_set in CutSet.all_for(5):
            for gen in fixed_gens(cut_set):
                for j in cut_set.kept():
                    assert is_fixed(gen, rep, parse_braid(f"a{j}", 5))

    def test_single_fixed_gens(self):
        assert [k_text(g) for g in single_fixed_gens(2, 4)] == ["x1", "x2 x3", "x4"]

    def test_membership(self):
        cut_set = CutSet(3, (1,))
        assert in_fixed_subgroup(k("x1 x2 x3 x1", 3), cut_set)
        assert not in_fixed_subgroup(k("x1 x2", 3), cut_set)
        assert in_single_fixed_subgroup(k("x1 x2 x3", 3), 1)
        assert in_single_fixed_subgroup(k("x2 x1", 3), 1)
        assert not in_single_fixed_subgroup(k("x1", 3), 1)


class TestFixedElements:

    def test_delta_fixed_by_all(self):
        assert fixed_by_all(delta_word(4), representation(RepKind.RHO_PLUS, 4))

    def test_pair_fixed_by_single_generator(self):
        rep = representation(RepKind.RHO_PLUS, 3)
        assert is_fixed(k("x1 x2", 3), rep, parse_braid("a1", 3))
        assert not is_fixed(k("x1 x2", 3), rep, parse_braid("a2", 3))

    def test_x0_fixed_under_rho_d(self):
        for n in (4, 5, 6):
            assert fixed_by_all(x0_word(n), representation(RepKind.RHO_D_V, n))


class TestClassification:

    @pytest.mark.parametrize("text,expected", [
        ("x2 x3 x1 x2 x3 x1", 2),
        ("e", 0),
        ("x1 x2", None),
        ("x3 x2 x1", -1),
    ])
    def test_conj_to_delta_power(self, text, expected):
        assert conj_to_delta_power(k(text, 3)) == expected

    def test_conj_to_u0_power(self):
        assert conj_to_u0_power(parse_word("u3 u1 u2", Alphabet.U), 3) == 1
        assert conj_to_u0_power(parse_word("u1 u2", Alphabet.U), 3) is None

    @pytest.mark.parametrize("text,expected", [
        ("u2^-1 u1^3 u2", "power-of-u_j(1,3)"),
        ("u3 u1 u2", "power-of-u0(1)"),
        ("u1 u2^-1", "other"),
        ("e", "power-of-u0(0)"),
    ])
    def test_dyer_grossman(self, text, expected):
        assert str(dyer_grossman_classify(parse_word(text, Alphabet.U), 3)) == expected

    @pytest.mark.parametrize("exponent", [-2, -1, 0, 1, 2])
    def test_delta_powers_invariant(self, exponent):
        rep = representation(RepKind.RHO_PLUS, 4)
        assert braid_invariant_classify(delta_word(4) ** exponent, rep)

    def test_pair_not_invariant(self):
        assert not braid_invariant_classify(k("x1 x2", 3), representation(RepKind.RHO_PLUS, 3))

    def test_x0_invariant(self):
        assert braid_invariant_classify(x0_word(4), representation(RepKind.RHO_D_V, 4))

    def test_cyclic_shifts(self):
        assert [k_text(w) for w in cyclic_shifts(k("x3 x1 x2 x3", 3))] == ["x1 x2", "x2 x1"]

    def test_fixed_representatives_small_sweep(self):
        for w in enumerate_words(WordKind.K_WORDS, 3, 6):
            for j in (1, 2):
                assert single_invariant_has_fixed_representative(w, j)
            for cut_set in CutSet.all_for(3):
                assert t_invariant_has_fixed_conjugate(w, cut_set)


class TestEnumeration:

    def test_k_words(self):
        words = [k_text(w) for w in enumerate_words(WordKind.K_WORDS, 3, 2)]
        assert words == ["e", "x1", "x2", "x3", "x1 x2", "x1 x3", "x2 x1", "x2 x3", "x3 x1", "x3 x2"]

    def test_f_words(self):
        words = [word_text(w) for w in enumerate_words(WordKind.F_WORDS, 2, 1)]
        assert words == ["e", "u1", "u1^-1", "u2", "u2^-1"]

    def test_braid_words(self):
        words = [braid_text(b) for b in enumerate_words(WordKind.BRAID_WORDS, 3, 1)]
        assert words == ["e", "a1", "a1^-1", "a2", "a2^-1"]

    @pytest.mark.parametrize("kind,n,length", [
        (WordKind.K_WORDS, 3, 5), (WordKind.F_WORDS, 2, 4), (WordKind.BRAID_WORDS, 4, 3),
    ])
    def test_counts_and_uniqueness(self, kind, n, length):
        words = list(enumerate_words(kind, n, length))
        assert len(words) == enumeration_size(kind, n, length)
        assert len(set(words)) == len(words)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_words(WordKind.K_WORDS, 3, 10, budget=100)

    def test_cyclically_reduced(self):
        assert is_cyclically_reduced(k("x1 x2", 3))
        assert not is_cyclically_reduced(k("x1 x2 x1", 3))
