"""Binary words, Hamming distance, block codes, and the Hamming (7,4) code.

Proof-net families behave like one-error-detecting codes: the family
metric plays the role of Hamming distance and the proof nets play the role
of codewords.  This module provides the classical side of that analogy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import LengthMismatchError, TooFewCodewordsError


@dataclass(frozen=True)
class BinaryWord:
    """A fixed-length word over {0,1}; indexing is 1-based."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise ValueError("a binary word must be nonempty")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def from_string(cls, s: str) -> BinaryWord:
        return cls(tuple(int(c) for c in s))

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.bits):
            raise IndexError(f"position {i} out of range 1..{len(self.bits)}")
        return self.bits[i - 1]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def word_distance(w1: BinaryWord, w2: BinaryWord) -> int:
    """Number of positions where the words disagree."""
    if len(w1) != len(w2):
        raise LengthMismatchError(
            f"words have different lengths: {len(w1)} and {len(w2)}"
        )
    return sum(a != b for a, b in zip(w1.bits, w2.bits))


@dataclass(frozen=True)
class BlockCode:
    length: int
    words: frozenset[BinaryWord]

    def __post_init__(self):
        if any(len(w) != self.length for w in self.words):
            raise LengthMismatchError("all codewords must share the block length")

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: BinaryWord) -> bool:
        return w in self.words


def code_distance(c: BlockCode) -> int:
    """Minimum pairwise distance over distinct codewords."""
    if len(c.words) < 2:
        raise TooFewCodewordsError("code distance needs at least two codewords")
    return min(
        word_distance(a, b) for a, b in itertools.combinations(c.words, 2)
    )


_PARITY_CHECKS = ((1, 2, 4, 5), (2, 3, 4, 6), (1, 3, 4, 7))


def _satisfies_parities(w: BinaryWord) -> bool:
    return all(sum(w[i] for i in check) % 2 == 0 for check in _PARITY_CHECKS)


def hamming74() -> BlockCode:
    """The Hamming (7,4) code: the 16 length-7 words whose three parity
    equations all vanish.  Membership is by evaluation, not table lookup."""
    words = frozenset(
        w
        for bits in itertools.product((0, 1), repeat=7)
        if _satisfies_parities(w := BinaryWord(bits))
    )
    return BlockCode(length=7, words=words)


def is_one_error_correcting(c: BlockCode) -> bool:
    """Every word at distance 1 from a codeword has a unique nearest
    codeword; checked over the full word space."""
    for bits in itertools.product((0, 1), repeat=c.length):
        w = BinaryWord(bits)
        close = [cw for cw in c.words if word_distance(w, cw) <= 1]
        if len(close) > 1:
            return False
    return True
