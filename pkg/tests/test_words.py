from __future__ import annotations

import pytest

from braidmono import (
    BraidWord,
    FreeWord,
    GBase,
    Permutation,
    artin_action,
    braid_equal,
    braid_permutation,
    exponent_sum,
    free_reduce,
)
from braidmono.errors import DimensionMismatchError, MalformedWordError


def test_free_word_reduces_on_construction():
    w = FreeWord(3, (1, 2, -2, -1, 3))
    assert w.letters == (3,)


def test_free_word_rejects_bad_letters():
    with pytest.raises(MalformedWordError):
        FreeWord(2, (0,))
    with pytest.raises(MalformedWordError):
        FreeWord(2, (3,))
    with pytest.raises(MalformedWordError):
        FreeWord(0)


def test_free_word_group_operations():
    w = FreeWord(2, (1, 2))
    assert (w * w.inverse()).is_identity
    assert w.inverse().letters == (-2, -1)
    assert w.conjugate(FreeWord(2, (2,))).letters == (2, 1)
    assert free_reduce(FreeWord(2, (1, -1))).is_identity


def test_word_rank_mismatch():
    with pytest.raises(DimensionMismatchError):
        FreeWord(2, (1,)) * FreeWord(3, (1,))


def test_braid_word_keeps_letters_verbatim():
    b = BraidWord(3, (1, -1))
    assert b.letters == (1, -1)
    assert braid_equal(b, BraidWord.identity(3))


def test_braid_word_range_checks():
    with pytest.raises(MalformedWordError):
        BraidWord(2, (2,))
    with pytest.raises(MalformedWordError):
        BraidWord(3, (0,))


def test_braid_power_and_inverse():
    b = BraidWord(3, (1, 2))
    assert (b ** 2).letters == (1, 2, 1, 2)
    assert (b ** -1).letters == (-2, -1)
    assert braid_equal(b * b.inverse(), BraidWord.identity(3))


def test_positive_generator_substitution():
    s1 = BraidWord(2, (1,))
    assert artin_action(s1, FreeWord.generator(2, 1)).letters == (2,)
    assert artin_action(s1, FreeWord.generator(2, 2)).letters == (2, 1, -2)


def test_negative_generator_substitution():
    s1inv = BraidWord(2, (-1,))
    assert artin_action(s1inv, FreeWord.generator(2, 2)).letters == (1,)
    assert artin_action(s1inv, FreeWord.generator(2, 1)).letters == (-1, 2, 1)


def test_action_composes_left_to_right():
    a = BraidWord(3, (1,))
    b = BraidWord(3, (2,))
    w = FreeWord(3, (1, 2, 3))
    assert artin_action(a * b, w) == artin_action(b, artin_action(a, w))


def test_action_fixes_descending_product():
    b = BraidWord(4, (1, 3, -2, 1, 2, 2, -3))
    w = FreeWord(4, (4, 3, 2, 1))
    assert artin_action(b, w) == w


def test_action_inverse_roundtrip():
    b = BraidWord(4, (1, 3, -2, 2, 1))
    w = FreeWord(4, (2, -3, 1, 4))
    assert artin_action(b * b.inverse(), w) == w


def test_action_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        artin_action(BraidWord(3, (1,)), FreeWord(2, (1,)))


def test_braid_relations():
    assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not braid_equal(BraidWord(3, (1,)), BraidWord(3, (2,)))


def test_full_twist_word_identity():
    # On three strands (s1 s2)^3 equals s1^2 s2 s1^2 s2.
    lhs = BraidWord(3, (1, 2)) ** 3
    rhs = BraidWord(3, (1, 1, 2, 1, 1, 2))
    assert braid_equal(lhs, rhs)


def test_full_twist_is_central_conjugation():
    # The full twist acts by conjugation with the descending product.
    n = 3
    delta2 = BraidWord(n, (1, 2)) ** n
    c = FreeWord(n, (3, 2, 1))
    for k in range(1, n + 1):
        x = FreeWord.generator(n, k)
        assert artin_action(delta2, x) == x.conjugate(c)


def test_braid_equal_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        braid_equal(BraidWord(2, (1,)), BraidWord(3, (1,)))


def test_permutation_validation():
    with pytest.raises(MalformedWordError):
        Permutation((1, 1))
    assert Permutation.identity(3).is_identity


def test_permutation_composition_order():
    p = Permutation.transposition(3, 1, 2)
    q = Permutation.transposition(3, 2, 3)
    assert (p * q).images == (3, 1, 2)
    assert (p * q)(1) == q(p(1))
    assert (p * p.inverse()).is_identity


def test_braid_permutation_matches_strand_motion():
    b = BraidWord(3, (1, 2))
    assert braid_permutation(b).images == (3, 1, 2)
    assert braid_permutation(b.inverse()) == braid_permutation(b).inverse()


def test_exponent_sum_counts_signs():
    assert exponent_sum(BraidWord(3, (1, 2, -1, -1))) == 0
    assert exponent_sum(BraidWord(2, (1, 1, 1, 1))) == 4


def test_standard_gbase():
    g = GBase.standard(3)
    assert [w.letters for w in g.loops] == [(1,), (2,), (3,)]
    with pytest.raises(DimensionMismatchError):
        GBase(2, (FreeWord.generator(2, 1),))
