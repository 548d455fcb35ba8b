#!/usr/bin/env python3
"""
ArtinBD Toolkit - Braid word tests
License: MIT
"""

import os
import random
import sys

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.braids import (BraidWord, beta0, beta_chain, braid_text, length_hom, parse_braid,
                           perm_image, perm_images, random_braid, zeta)
from groups.errors import FamilyMismatchError, IndexRangeError, WordParseError


@pytest.mark.parametrize("text,expected", [("a1 a2^-1", 0), ("e", 0), ("a1 a1 a2", 3)])
def test_length_hom(text, expected):
    assert length_hom(parse_braid(text, 3)) == expected


def test_zeta_length():
    assert length_hom(zeta(3)) == 6
    assert length_hom(zeta(5)) == 20


@pytest.mark.parametrize("text,expected", [
    ("a1", (2, 1, 3)),
    ("a1 a1", (1, 2, 3)),
    ("a1 a2", (2, 3, 1)),
])
def test_perm_image(text, expected):
    assert perm_images(perm_image(parse_braid(text, 3))) == expected


def test_perm_image_composes_as_left_action():
    rng = random.Random(7)
    for _ in range(50):
        b1, b2 = random_braid(4, 5, rng), random_braid(4, 5, rng)
        first, second = perm_images(perm_image(b1)), perm_images(perm_image(b2))
        assert perm_images(perm_image(b1 * b2)) == tuple(first[j - 1] for j in second)


def test_named_braids():
    assert braid_text(zeta(3)) == "a1 a2 a1 a2 a1 a2"
    assert braid_text(beta0()) == "a1 a2 a3 a1 a2 a3"
    assert braid_text(beta_chain(5)) == "a1 a2 a3"


def test_cancellation_and_inverse():
    b = parse_braid("a1 a2 a2^-1 a1^-1", 3)
    assert b.is_identity()
    assert braid_text(~parse_braid("a1 a2^-1", 3)) == "a2 a1^-1"


def test_range_errors():
    with pytest.raises(IndexRangeError):
        parse_braid("a3", 3)
    with pytest.raises(IndexRangeError):
        BraidWord(1)
    with pytest.raises(FamilyMismatchError):
        parse_braid("a1", 3) * parse_braid("a1", 4)
    with pytest.raises(WordParseError):
        parse_braid("b1", 3)
