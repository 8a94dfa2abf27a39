"""Permutations of positions ``0..m-1`` with lengths and reduced words.

A permutation is stored in one-line notation ``(sigma(0), ..., sigma(m-1))``.
The simple transposition ``s_i`` swaps positions ``i`` and ``i + 1``, and a
word ``(i_1, ..., i_k)`` stands for ``s_{i_1} o ... o s_{i_k}``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _perms


class Permutation(tuple):
    __slots__ = ()

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(range(m))

    @classmethod
    def simple(cls, i: int, m: int) -> Permutation:
        p = list(range(m))
        p[i], p[i + 1] = p[i + 1], p[i]
        return cls(p)

    @classmethod
    def from_word(cls, word, m: int) -> Permutation:
        p = cls.identity(m)
        for i in word:
            p = p * cls.simple(i, m)
        return p

    @property
    def size(self) -> int:
        return len(self)

    def __mul__(self, other):
        """Composition ``self o other``."""
        return Permutation(self[i] for i in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation(inv)

    def inversions(self):
        """Position pairs ``a < b`` with ``sigma(a) > sigma(b)``."""
        m = len(self)
        return [(a, b) for a in range(m) for b in range(a + 1, m) if self[a] > self[b]]

    def length(self) -> int:
        return len(self.inversions())

    def right_descents(self):
        return [i for i in range(len(self) - 1) if self[i] > self[i + 1]]

    def reduced_word(self) -> tuple:
        """A reduced word obtained by repeatedly splitting off the first right
        descent (a bubble sort of the one-line notation)."""
        word = []
        p = self
        while True:
            d = p.right_descents()
            if not d:
                break
            i = d[0]
            word.append(i)
            p = p * Permutation.simple(i, len(p))
        return tuple(reversed(word))

    def reduced_words(self):
        return _reduced_words(tuple(self))

    def __repr__(self):
        return f"Permutation({tuple(self)})"


@lru_cache(maxsize=None)
def _reduced_words(images):
    p = Permutation(images)
    d = p.right_descents()
    if not d:
        return [()]
    out = []
    for i in d:
        q = p * Permutation.simple(i, len(p))
        out.extend(w + (i,) for w in _reduced_words(tuple(q)))
    return sorted(set(out))


def symmetric_group(m: int):
    return [Permutation(p) for p in _perms(range(m))]
