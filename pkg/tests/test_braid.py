import random
from math import gcd

import pytest

from twistedtorus.braid import (
    BraidWord,
    InvalidTorusParameters,
    TwistedTorusKnot,
    braid_from_text,
    braid_to_text,
    closure_components,
    compose,
    dean_braid,
    family_km,
    is_msy_family,
    permutation,
)


def test_braid_word_validation():
    with pytest.raises(InvalidTorusParameters):
        BraidWord(1, ())
    with pytest.raises(InvalidTorusParameters):
        BraidWord(3, (0,))
    with pytest.raises(InvalidTorusParameters):
        BraidWord(3, (3,))
    BraidWord(3, (1, 2, -1, -2))  # fine


def test_dean_braid_trefoil():
    assert dean_braid(TwistedTorusKnot(2, 3, 0)) == BraidWord(2, (1, 1, 1))


def test_dean_braid_k1():
    b = dean_braid(TwistedTorusKnot(7, 17, 6))
    assert len(b) == 17 * 6 + 6 == 108
    assert b.letters[:6] == (1, 2, 3, 4, 5, 6)
    assert b.letters[-6:] == (1,) * 6
    assert b.strands == 7


def test_dean_braid_twisted_two_strand():
    assert dean_braid(TwistedTorusKnot(2, 3, 2)) == BraidWord(2, (1,) * 5)


def test_dean_braid_negative_twists():
    b = dean_braid(TwistedTorusKnot(2, 3, -4))
    assert b.letters == (1, 1, 1, -1, -1, -1, -1)


def test_family_km():
    k1 = family_km(1)
    assert (k1.p, k1.q, k1.r) == (7, 17, 6)
    assert k1.full_twists == 3
    k2 = family_km(2)
    assert (k2.p, k2.q, k2.r) == (7, 17, 16)
    assert k2.full_twists == 8
    km1 = family_km(-1)
    assert (km1.p, km1.q, km1.r) == (7, 17, -14)
    assert km1.full_twists == -7


def test_is_msy_family():
    assert is_msy_family(family_km(0))
    assert is_msy_family(family_km(-3))
    assert not is_msy_family(TwistedTorusKnot(7, 17, 2))
    assert not is_msy_family(TwistedTorusKnot(2, 3, 6))


def test_knot_validation():
    with pytest.raises(InvalidTorusParameters):
        TwistedTorusKnot(4, 6, 0)  # gcd 2
    with pytest.raises(InvalidTorusParameters):
        TwistedTorusKnot(2, 3, 3)  # odd twists
    with pytest.raises(InvalidTorusParameters):
        TwistedTorusKnot(1, 5, 0)


def test_permutation_pure_braid():
    b = BraidWord(2, (1, 1))
    assert permutation(b) == (0, 1)
    assert closure_components(b) == 2


def test_permutation_single_crossing():
    b = BraidWord(2, (1,))
    assert permutation(b) == (1, 0)
    assert closure_components(b) == 1


def test_permutation_k1_is_seven_cycle():
    b = dean_braid(TwistedTorusKnot(7, 17, 6))
    perm = permutation(b)
    assert closure_components(b) == 1
    # single cycle through all 7 strands
    seen, j = set(), 0
    while j not in seen:
        seen.add(j)
        j = perm[j]
    assert len(seen) == 7


def test_inverse_word():
    w = BraidWord(4, (1, -2, 3))
    assert w.inverse() == BraidWord(4, (-3, 2, -1))
    assert permutation(w * w.inverse()) == (0, 1, 2, 3)


def test_concat_requires_same_strands():
    with pytest.raises(InvalidTorusParameters):
        BraidWord(3, (1,)) * BraidWord(4, (1,))


def test_permutation_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 6)
        letters = lambda: tuple(
            rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 8))
        )
        u, v = BraidWord(n, letters()), BraidWord(n, letters())
        assert permutation(u * v) == compose(permutation(v), permutation(u))


def test_every_valid_knot_closes_to_one_component():
    for p in range(2, 6):
        for q in range(2, 10):
            if gcd(p, q) != 1:
                continue
            for r in (0, 2, 4, -2, -6):
                k = TwistedTorusKnot(p, q, r)
                b = dean_braid(k)
                assert closure_components(b) == 1
                assert len(b) == q * (p - 1) + abs(r)


def test_braid_text_roundtrip():
    b = BraidWord(7, (1, 2, 3, 4, 5, 6, 1, -1, -6))
    assert braid_to_text(b) == "1 2 3 4 5 6 1 -1 -6"
    assert braid_from_text(braid_to_text(b), 7) == b
