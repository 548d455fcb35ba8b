#!/usr/bin/env python3
"""
ArtinBD Toolkit - Semidirect product tests
License: MIT
"""

import os
import random
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.braids import BraidWord, braid_text, parse_braid, zeta
from groups.errors import FamilyMismatchError, FlavorError, WordParseError
from groups.free_words import FreeWord, abelianize, parse_word, word_text
from groups.involutive_products import delta_word, express_in_g
from groups.semidirect import (FlavorTag, GroupFlavor, SemidirectElement, SignedPermutation, center_element,
                               commutes, coxeter_project, element_text, eps_n, parse_element, phi,
                               phi_images, pi, presentation_generator, psi, random_element,
                               relation_pairs, sd_equal, sd_identity, sd_invert, section, tau_n,
                               to_ksemidirect, verify_presentation, x0_word)
from groups.symbols import Alphabet

B3 = GroupFlavor(FlavorTag.ARTIN_B, 3)
D4 = GroupFlavor(FlavorTag.ARTIN_D, 4)


def el(text: str, flavor: GroupFlavor) -> SemidirectElement:
    return parse_element(text, flavor)


def pres(text: str, flavor: GroupFlavor) -> FreeWord:
    alphabet = Alphabet.PRES_B if flavor.tag is FlavorTag.ARTIN_B else Alphabet.PRES_D
    return parse_word(text, alphabet)


class TestArithmetic:

    def test_multiply(self):
        assert element_text(el("(u1 | e)", B3) * el("(e | a1)", B3)) == "(u1 | a1)"
        assert element_text(el("(e | a1)", B3) * el("(u1 | e)", B3)) == "(u2 | a1)"

    def test_invert(self):
        assert element_text(sd_invert(el("(e | a1)", B3))) == "(e | a1^-1)"

    @pytest.mark.parametrize("flavor", [B3, D4, GroupFlavor(FlavorTag.K_SEMIDIRECT, 4)])
    def test_group_axioms_on_random_elements(self, flavor):
        rng = random.Random(23)
        identity = sd_identity(flavor)
        for _ in range(20):
            a, b, c = (random_element(flavor, rng) for _ in range(3))
            assert sd_equal((a * b) * c, a * (b * c))
            assert sd_equal(a * ~a, identity)
            assert sd_equal(identity * a, a)

    def test_sd_equal(self):
        assert sd_equal(el("(e | a1 a2 a1)", B3), el("(e | a2 a1 a2)", B3))
        assert not sd_equal(el("(u1 | e)", B3), el("(u2 | e)", B3))

    def test_flavor_mismatch(self):
        with pytest.raises(FlavorError):
            el("(e | a1)", B3) * el("(e | a1)", GroupFlavor(FlavorTag.ARTIN_B, 4))

    def test_fiber_family_checked(self):
        with pytest.raises(FamilyMismatchError):
            SemidirectElement(B3, parse_word("g1", Alphabet.G), BraidWord(3))
        with pytest.raises(FamilyMismatchError):
            SemidirectElement(D4, parse_word("g4", Alphabet.G), BraidWord(4))

    def test_minimum_rank(self):
        with pytest.raises(FlavorError):
            GroupFlavor(FlavorTag.ARTIN_D, 3)

    def test_parse_errors(self):
        with pytest.raises(WordParseError):
            el("u1 | a1", B3)

    def test_v_fiber_converted(self):
        assert element_text(el("(v2 | e)", D4)) == "(g1 g2 | e)"


class TestPresentations:

    def test_projection_and_section(self):
        assert pi(phi(pres("b1", B3), B3)).is_identity()
        assert braid_text(pi(phi(pres("d1", D4), D4))) == "a1"
        assert braid_text(pi(phi(pres("d2", D4), D4))) == "a1"
        assert sd_equal(section(parse_braid("a1", 3), B3), phi(pres("b2", B3), B3))

    @pytest.mark.parametrize("text,flavor,expected", [
        ("b1", B3, "(u1 | e)"),
        ("b2 b1 b2^-1", B3, "(u2 | e)"),
        ("d1", D4, "(g1 | a1)"),
        ("d2", D4, "(e | a1)"),
    ])
    def test_phi(self, text, flavor, expected):
        assert element_text(phi(pres(text, flavor), flavor)) == expected

    @pytest.mark.parametrize("element,flavor,expected", [
        ("(u2 | e)", B3, "b2 b1 b2^-1"),
        ("(g1 | e)", D4, "d1 d2^-1"),
        ("(g1 g2 | e)", D4, "d3 d1 d2^-1 d3^-1"),
        ("(e | a2)", D4, "d3"),
    ])
    def test_psi(self, element, flavor, expected):
        assert word_text(psi(el(element, flavor))) == expected

    @pytest.mark.parametrize("flavor", [B3, GroupFlavor(FlavorTag.ARTIN_B, 5), D4, GroupFlavor(FlavorTag.ARTIN_D, 5)])
    def test_round_trips(self, flavor):
        rng = random.Random(29)
        for i in range(1, flavor.n + 1):
            gen = presentation_generator(flavor, i)
            assert sd_equal(phi(psi(phi(gen, flavor)), flavor), phi(gen, flavor))
        for _ in range(30):
            e = random_element(flavor, rng)
            assert sd_equal(phi(psi(e), flavor), e)

    @pytest.mark.parametrize("flavor", [B3, D4, GroupFlavor(FlavorTag.ARTIN_D, 6)])
    def test_presentation_relations(self, flavor):
        assert verify_presentation(phi_images(flavor), relation_pairs(flavor))

    def test_corrupted_presentation(self):
        images = phi_images(B3)
        images[1] = SemidirectElement(B3, parse_word("u2", Alphabet.U), BraidWord(3))
        assert not verify_presentation(images, relation_pairs(B3))

    def test_k_has_no_presentation(self):
        with pytest.raises(FlavorError):
            relation_pairs(GroupFlavor(FlavorTag.K_SEMIDIRECT, 3))


class TestCenter:

    def test_center_elements(self):
        assert element_text(center_element(B3)) == "(u1 u2 u3 | a1 a2 a1 a2 a1 a2)"
        d4 = center_element(D4)
        assert d4.fiber == express_in_g(delta_word(4)) and d4.braid == zeta(4)
        d5 = center_element(GroupFlavor(FlavorTag.ARTIN_D, 5))
        assert d5.fiber == express_in_g(delta_word(5) ** 2) and d5.braid == zeta(5) ** 2

    @pytest.mark.parametrize("flavor", [
        B3, GroupFlavor(FlavorTag.ARTIN_B, 4), D4, GroupFlavor(FlavorTag.ARTIN_D, 5),
        GroupFlavor(FlavorTag.K_SEMIDIRECT, 3), GroupFlavor(FlavorTag.K_SEMIDIRECT, 4),
    ])
    def test_center_commutes(self, flavor):
        rng = random.Random(31)
        c = center_element(flavor)
        assert commutes(c, SemidirectElement(flavor, flavor.fiber_identity(), parse_braid("a1", flavor.n)))
        for _ in range(10):
            assert commutes(c, random_element(flavor, rng))


class TestSpecialAutomorphisms:

    def test_eps_inverts_generators(self):
        assert sd_equal(eps_n(phi(pres("b1", B3), B3)), phi(pres("b1^-1", B3), B3))

    def test_tau_swaps_fork(self):
        assert sd_equal(tau_n(phi(pres("d1", D4), D4)), phi(pres("d2", D4), D4))
        assert sd_equal(tau_n(phi(pres("d3", D4), D4)), phi(pres("d3", D4), D4))

    def test_tau_is_involution(self):
        rng = random.Random(37)
        for _ in range(100):
            e = random_element(D4, rng)
            assert sd_equal(tau_n(tau_n(e)), e)

    def test_tau_agrees_with_k_conjugation(self):
        rng = random.Random(41)
        for _ in range(20):
            e = random_element(D4, rng)
            assert sd_equal(to_ksemidirect(tau_n(e)), tau_n(to_ksemidirect(e)))

    def test_eps_is_multiplicative(self):
        rng = random.Random(43)
        for flavor in (B3, D4, GroupFlavor(FlavorTag.K_SEMIDIRECT, 4)):
            for _ in range(10):
                a, b = random_element(flavor, rng), random_element(flavor, rng)
                assert sd_equal(eps_n(a * b), eps_n(a) * eps_n(b))
                assert sd_equal(eps_n(eps_n(a)), a)

    def test_tau_undefined_on_b(self):
        with pytest.raises(FlavorError):
            tau_n(sd_identity(B3))


class TestCoxeterProjection:

    def test_fiber_generator_flips_sign(self):
        image = coxeter_project(phi(pres("b1", B3), B3))
        assert image == SignedPermutation((1, 2, 3), (-1, 1, 1))

    def test_braid_generator_transposes(self):
        image = coxeter_project(phi(pres("b2", B3), B3))
        assert image == SignedPermutation((2, 1, 3), (1, 1, 1))

    def test_d_generator_is_even(self):
        image = coxeter_project(phi(pres("d1", D4), D4))
        assert image.perm == (2, 1, 3, 4)
        assert image.signs == (-1, -1, 1, 1)
        assert image.is_even()

    def test_projection_is_homomorphism(self):
        rng = random.Random(47)
        for flavor in (B3, D4):
            for _ in range(20):
                a, b = random_element(flavor, rng), random_element(flavor, rng)
                assert coxeter_project(a * b) == coxeter_project(a) * coxeter_project(b)


class TestX0:

    def test_x0_words(self):
        assert word_text(x0_word(4)) == "v1 v2^-1 v3"
        assert word_text(x0_word(5)) == "v1 v2^-1 v3 v4^-1 v1^-1 v2 v3^-1 v4"
        assert abelianize(x0_word(4), 3).coords == (1, -1, 1)
