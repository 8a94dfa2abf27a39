from itertools import permutations

import pytest

from uqplus.permutations import Permutation, symmetric_group


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_group_order(m):
    assert len(symmetric_group(m)) == len(list(permutations(range(m))))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_reduced_words(m):
    for p in symmetric_group(m):
        words = p.reduced_words()
        assert p.reduced_word() in words
        for w in words:
            assert len(w) == p.length()
            assert Permutation.from_word(w, m) == p


def test_reduced_word_counts_s4():
    # the longest element of S4 has 16 reduced words
    w0 = Permutation((3, 2, 1, 0))
    assert w0.length() == 6
    assert len(w0.reduced_words()) == 16


def test_inverse_and_product():
    for p in symmetric_group(4):
        assert p * p.inverse() == Permutation.identity(4)
