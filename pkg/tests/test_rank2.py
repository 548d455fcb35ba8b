#!/usr/bin/env python3
"""
ArtinBD Toolkit - Rank-2 Artin group tests
License: MIT
"""

import os
import random
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.errors import BudgetExceededError, CenterViolationError, FlavorError, IndexRangeError, NotAutomorphismError
from groups.free_words import parse_word, word_text
from groups.involutive_products import INFINITE, fp_gen, fp_text, parse_fp_word
from groups.rank2 import (AutoDescriptor, Rank2Group, ab_words, classify_quotient_auto, descriptors_equivalent,
                          inner_images, parse_images, random_ab_word, random_descriptor,
                          relation_closure_classes)
from groups.symbols import Alphabet


def ab(text: str):
    return parse_word(text, Alphabet.AB)


def std(text: str):
    return parse_word(text, Alphabet.STD)


class TestCoordinates:

    def test_alpha_in_ab(self):
        assert word_text(Rank2Group(3).std_to_ab(std("alpha"))) == "a^-1 b"
        group = Rank2Group(4)
        assert word_text(group.std_to_ab(std("beta"))) == "b"
        assert word_text(group.std_to_ab(std("alpha"))) == "a b^-1"

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_round_trip(self, m):
        group = Rank2Group(m)
        rng = random.Random(m)
        for _ in range(20):
            w = random_ab_word(8, rng)
            assert group.nf_equal(group.std_to_ab(group.ab_to_std(w)), w)

    def test_m_too_small(self):
        with pytest.raises(IndexRangeError):
            Rank2Group(2)

    def test_short_std_prefixes(self):
        assert std("a b") == std("alpha beta")


class TestNormalForm:

    @pytest.mark.parametrize("m,text,c_exp,residue", [
        (3, "a a a", 1, "e"),
        (3, "a a a a", 1, "a"),
        (4, "b a a b^-1", 1, "e"),
        (3, "b b", 1, "e"),
        (5, "b^-1", -1, "b"),
    ])
    def test_normal_form(self, m, text, c_exp, residue):
        group = Rank2Group(m)
        nf = group.normal_form(ab(text))
        assert nf.c_exp == c_exp
        assert word_text(group.lift(nf.residue)) == residue

    @pytest.mark.parametrize("m,first,second,equal", [
        (3, "a a a", "b b", True),
        (3, "a b", "b a", False),
        (4, "a a b", "b a a", True),
        (6, "a a a b", "b a a a", True),
    ])
    def test_nf_equal(self, m, first, second, equal):
        assert Rank2Group(m).nf_equal(ab(first), ab(second)) is equal

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 7])
    def test_defining_relation(self, m):
        group = Rank2Group(m)
        left, right = group.relation()
        assert group.nf_equal(left, right)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_nf_word_represents_input(self, m):
        group = Rank2Group(m)
        for w in ab_words(4):
            nf = group.normal_form(w)
            assert group.normal_form(group.nf_word(nf)) == nf
            assert group.separated_equal(group.nf_word(nf), w)

    def test_center_is_central(self):
        for m in (3, 4, 5, 6):
            group = Rank2Group(m)
            c = group.c_word()
            for w in ab_words(3):
                assert group.nf_equal(c * w, w * c)

    def test_to_dict(self):
        group = Rank2Group(3)
        assert group.normal_form(ab("a a a a")).to_dict(group) == {'c_exp': 1, 'residue': 'a', 'quotient': 'v'}


class TestSpecialAutomorphisms:

    def test_eps_on_alpha(self):
        assert word_text(Rank2Group(4).special_auto_apply('eps', std("alpha"))) == "alpha^-1"

    def test_eta_on_b(self):
        assert word_text(Rank2Group(4).special_auto_apply('eta', ab("b"))) == "b a"

    def test_tau_eps_inverts_a_for_odd_m(self):
        group = Rank2Group(5)
        image = group.special_auto_apply('tau', group.special_auto_apply('eps', ab("a")))
        assert group.nf_equal(image, ab("a^-1"))

    def test_eta_needs_even_m(self):
        with pytest.raises(FlavorError):
            Rank2Group(3).special_auto_apply('eta', ab("a"))

    def test_unknown_auto(self):
        with pytest.raises(FlavorError):
            Rank2Group(4).special_images('zeta')

    def test_delta_conj_is_tau_for_odd_m(self):
        group = Rank2Group(3)
        assert group.images_equal(group.special_images('delta_conj'), group.special_images('tau'))


class TestQuotientAutomorphisms:

    def test_power_map_on_c2_c5(self):
        orders = (2, 5)
        found = classify_quotient_auto({1: fp_gen(1, orders), 2: fp_gen(2, orders, 2)})
        assert found.witness.is_identity()
        assert found.r == 2

    def test_identity(self):
        orders = (2, 3)
        found = classify_quotient_auto({1: fp_gen(1, orders), 2: fp_gen(2, orders)})
        assert found.is_inner()

    def test_ck_z(self):
        orders = (2, INFINITE)
        found = classify_quotient_auto({1: fp_gen(1, orders), 2: parse_fp_word("v^-1 u", orders)})
        assert found.witness.is_identity()
        assert (found.eps, found.r, found.s) == (-1, 1, 1)

    def test_inner_witness_recovered(self):
        orders = (2, 3)
        w = parse_fp_word("u v u v^2", orders)
        images = {i: w * fp_gen(i, orders) * ~w for i in (1, 2)}
        found = classify_quotient_auto(images)
        assert found.is_inner()
        assert fp_text(found.witness) == fp_text(w)

    def test_not_an_automorphism(self):
        orders = (2, 3)
        with pytest.raises(NotAutomorphismError):
            classify_quotient_auto({1: fp_gen(2, orders), 2: fp_gen(2, orders)})

    def test_budget(self):
        orders = (2, 3)
        w = parse_fp_word("u v " * 4, orders)
        images = {i: w * fp_gen(i, orders) * ~w for i in (1, 2)}
        with pytest.raises(BudgetExceededError):
            classify_quotient_auto(images, budget=3)


class TestClassification:

    def test_identity(self):
        found = Rank2Group(4).classify_auto(parse_images("alpha", "beta"))
        assert found.inner_witness.is_identity()
        assert (found.e_eps, found.e_tau, found.e_eta) == (0, 0, 0)

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_eps(self, m):
        found = Rank2Group(m).classify_auto(parse_images("alpha^-1", "beta^-1"))
        assert found.inner_witness.is_identity()
        assert (found.e_eps, found.e_tau, found.e_eta) == (1, 0, 0)

    def test_eta(self):
        found = Rank2Group(4).classify_auto(parse_images("beta^-1", "beta alpha beta"))
        assert found.inner_witness.is_identity()
        assert (found.e_eps, found.e_tau, found.e_eta) == (0, 0, 1)
        assert str(found) == "iota(e) eps^0 tau^0 eta^1"

    def test_tau_even(self):
        found = Rank2Group(6).classify_auto(parse_images("beta", "alpha"))
        assert (found.e_eps, found.e_tau, found.e_eta) == (0, 1, 0)

    def test_tau_is_inner_for_odd_m(self):
        group = Rank2Group(3)
        found = group.classify_auto(parse_images("beta", "alpha"))
        assert (found.e_eps, found.e_tau, found.e_eta) == (0, 0, 0)
        assert group.images_equal(group.build_auto(found), group.special_images('tau'))

    def test_inner(self):
        group = Rank2Group(4)
        images = inner_images(std("alpha beta^-1"))
        found = group.classify_auto(images)
        assert (found.e_eps, found.e_tau, found.e_eta) == (0, 0, 0)
        assert group.images_equal(group.build_auto(found), images)

    def test_relation_not_preserved(self):
        with pytest.raises(NotAutomorphismError):
            Rank2Group(4).classify_auto(parse_images("alpha", "alpha"))

    def test_center_violation(self):
        with pytest.raises(CenterViolationError):
            Rank2Group(3).classify_auto(parse_images("alpha beta alpha", "alpha beta alpha"))

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_round_trips(self, m):
        group = Rank2Group(m)
        rng = random.Random(f"rank2-{m}")
        for _ in range(25):
            descriptor = random_descriptor(group, rng)
            found = group.classify_auto(group.build_auto(descriptor))
            assert descriptors_equivalent(group, descriptor, found)

    def test_odd_m_rejects_eta_exponent(self):
        with pytest.raises(FlavorError):
            Rank2Group(3).build_auto(AutoDescriptor(ab("e"), 0, 0, 1))


class TestClosure:

    def test_ab_words_count(self):
        assert len(list(ab_words(2))) == 1 + 4 + 12

    @pytest.mark.parametrize("m", [3, 4])
    def test_closure_classes_share_normal_form(self, m):
        group = Rank2Group(m)
        for words in relation_closure_classes(group, 4, cap=64):
            assert len({group.normal_form(w) for w in words}) == 1

    def test_closure_joins_relation_sides(self):
        group = Rank2Group(3)
        classes = relation_closure_classes(group, 3, cap=256)
        joined = [words for words in classes if ab("a a a") in words]
        assert ab("b b") in joined[0]
