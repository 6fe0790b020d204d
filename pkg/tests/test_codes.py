import random

import pytest

from mllnets.codes import (
    BinaryWord,
    BlockCode,
    code_distance,
    hamming74,
    is_one_error_correcting,
    word_distance,
)
from mllnets.errors import LengthMismatchError, TooFewCodewordsError


def w(s):
    return BinaryWord.from_string(s)


def test_word_distance_examples():
    assert word_distance(w("00110"), w("10011")) == 3
    assert word_distance(w("00110"), w("00110")) == 0
    assert word_distance(w("0000000"), w("1111111")) == 7


def test_word_distance_length_mismatch():
    with pytest.raises(LengthMismatchError):
        word_distance(w("00"), w("000"))


def test_one_based_indexing():
    word = w("0110")
    assert word[1] == 0 and word[2] == 1
    with pytest.raises(IndexError):
        word[0]
    with pytest.raises(IndexError):
        word[5]


def test_word_validation():
    with pytest.raises(ValueError):
        BinaryWord(())
    with pytest.raises(ValueError):
        BinaryWord((0, 2))


def test_metric_axioms():
    rng = random.Random(7)
    words = [BinaryWord(tuple(rng.randint(0, 1) for _ in range(6))) for _ in range(40)]
    for x in words:
        assert word_distance(x, x) == 0
    for x, y in zip(words, reversed(words)):
        assert word_distance(x, y) == word_distance(y, x)
        assert (word_distance(x, y) == 0) == (x == y)
    for x, y, z in zip(words, words[1:], words[2:]):
        assert word_distance(x, z) <= word_distance(x, y) + word_distance(y, z)


def test_code_distance_small():
    c = BlockCode(3, frozenset({w("000"), w("011")}))
    assert code_distance(c) == 2
    with pytest.raises(TooFewCodewordsError):
        code_distance(BlockCode(3, frozenset({w("000")})))


def test_block_code_length_check():
    with pytest.raises(LengthMismatchError):
        BlockCode(3, frozenset({w("000"), w("0000")}))


def test_hamming74():
    c = hamming74()
    assert c.length == 7
    assert len(c) == 16
    assert code_distance(c) == 3
    assert w("0000000") in c
    assert w("1111111") in c
    assert w("1000000") not in c


def test_hamming74_one_error_correcting():
    assert is_one_error_correcting(hamming74())
    # fails for a code of distance 2
    c = BlockCode(3, frozenset({w("000"), w("011")}))
    assert not is_one_error_correcting(c)
