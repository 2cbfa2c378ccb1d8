"""The classical Garside structure on the braid group B_n.

Simple elements are permutation braids, encoded in one-line notation as a
tuple of images (strand i maps to s[i-1]).  Delta is the half twist
[n, n-1, ..., 1]; the atoms are the elementary crossings sigma_1 ... sigma_{n-1}.

Composition convention: (a * b)(i) = b(a(i)), so appending sigma_k on the
right swaps the *values* k and k+1.  Under this convention the prefix order
on simples is containment of inversion sets, which gives an O(1) test per
atom extension in the meet.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .core import GarsideStructure


def _compose(a: tuple, b: tuple) -> tuple:
    return tuple(b[a[i] - 1] for i in range(len(a)))


def _invert(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v - 1] = i + 1
    return tuple(inv)


def _inversions(a: tuple) -> int:
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


class ArtinStructure(GarsideStructure):
    """Descriptor for B_n with permutation-braid simples."""

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError("need at least 2 strands")
        super().__init__()
        self.n = n
        self.name = f"artin-{n}"
        self.trivial = tuple(range(1, n + 1))
        self.delta = tuple(range(n, 0, -1))
        self.norm_of_delta = n * (n - 1) // 2
        self.tau_order = 2
        self.atoms = tuple(self.atom(k) for k in range(1, n))
        self._simples: tuple | None = None

    def atom(self, k: int) -> tuple:
        """The crossing sigma_k as a permutation."""
        if not 1 <= k < self.n:
            raise ValueError(f"atom index {k} out of range for {self.name}")
        im = list(range(1, self.n + 1))
        im[k - 1], im[k] = im[k], im[k - 1]
        return tuple(im)

    def leq(self, a, b) -> bool:
        # prefix order = containment of inversion sets
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] > a[j] and b[i] < b[j]:
                    return False
        return True

    def meet_simple(self, a, b):
        # Greedy atom extension u -> u sigma_k.  Appending sigma_k adds the
        # inversion at the positions of values k, k+1 (valid only if k sits
        # left of k+1 in u); the extension stays below a and b iff that
        # position pair is inverted in both.
        n = self.n
        u = list(range(1, n + 1))
        pos = list(range(n))  # pos[v-1] = index of value v in u
        changed = True
        while changed:
            changed = False
            for k in range(1, n):
                i, j = pos[k - 1], pos[k]
                if i < j and a[i] > a[j] and b[i] > b[j]:
                    u[i], u[j] = k + 1, k
                    pos[k - 1], pos[k] = j, i
                    changed = True
        return tuple(u)

    def _complement(self, s):
        return _compose(_invert(s), self.delta)

    def _complement_inv(self, s):
        return _compose(self.delta, _invert(s))

    def prod(self, a, b):
        return _compose(a, b)

    def lquot(self, s, b):
        return _compose(_invert(s), b)

    def rquot(self, b, s):
        return _compose(b, _invert(s))

    def _norm(self, s) -> int:
        return _inversions(s)

    def simples(self) -> tuple:
        if self._simples is None:
            self._simples = tuple(sorted(permutations(range(1, self.n + 1))))
        return self._simples

    def word_to_simple(self, word) -> tuple:
        """Product of atoms sigma_k for k in word, as a permutation.

        No check that the word is reduced; callers wanting a simple braid
        must pass a reduced word.
        """
        s = self.trivial
        for k in word:
            s = _compose(s, self.atom(k))
        return s

    def simple_to_word(self, s) -> list:
        """Canonical reduced word for a permutation braid.

        Letters are peeled off the right end, smallest applicable generator
        first; deterministic, and a staircase-shaped factorization for Delta.
        """
        n = self.n
        cur = list(s)
        pos = [0] * n
        for i, v in enumerate(cur):
            pos[v - 1] = i
        out: list = []
        remaining = self.norm(s)
        while remaining:
            for k in range(1, n):
                i, j = pos[k], pos[k - 1]  # positions of k+1 and k
                if i < j:
                    # sigma_k is a final letter: strip it
                    cur[i], cur[j] = cur[j], cur[i]
                    pos[k], pos[k - 1] = j, i
                    out.append(k)
                    remaining -= 1
                    break
        out.reverse()
        return out


@lru_cache(maxsize=None)
def artin_structure(n: int) -> ArtinStructure:
    """Shared descriptor instance for B_n (memoized, one per n)."""
    return ArtinStructure(n)
