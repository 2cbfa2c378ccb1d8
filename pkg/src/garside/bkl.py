"""The band-generator (dual) Garside structure on B_n.

Simple elements are non-crossing partitions of {1..n}, encoded as a tuple
of block labels of length n with blocks numbered 0, 1, ... in order of
their minimal elements.  The Garside element is the n-cycle
delta = sigma_{n-1} ... sigma_1; the atoms are the band generators a_{t,s}
(1 <= s < t <= n), the two-element blocks {s, t}.

A block {i_1 < ... < i_k} corresponds to the braid
a_{i_k, i_{k-1}} ... a_{i_2, i_1}, whose underlying permutation is the
cycle i_1 -> i_2 -> ... -> i_k -> i_1.  Divisibility of simples is
refinement of partitions; complement and tau are computed through the
underlying permutations, which realizes the Kreweras complement (this is
validated exhaustively in the tests rather than taken on faith).
"""

from __future__ import annotations

from functools import lru_cache

from .core import GarsideStructure
from .artin import _compose, _invert


def _canonical_labels(raw) -> tuple:
    """Relabel an arbitrary label sequence by first occurrence."""
    seen: dict = {}
    out = []
    for v in raw:
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)


def blocks_of(s: tuple) -> list:
    """Blocks of a partition encoding, as lists of 1-based elements,
    ordered by minimal element."""
    out: list = []
    for i, lab in enumerate(s):
        while lab >= len(out):
            out.append([])
        out[lab].append(i + 1)
    return out


def partition_from_blocks(n: int, blocks) -> tuple:
    labels = [-1] * n
    for b in blocks:
        for i in b:
            labels[i - 1] = min(b)
    if -1 in labels:
        raise ValueError("blocks do not cover {1..n}")
    return _canonical_labels(labels)


def is_noncrossing(s: tuple) -> bool:
    n = len(s)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if s[a] == s[c] and s[b] == s[d] and s[a] != s[b]:
                        return False
    return True


class BKLStructure(GarsideStructure):
    """Descriptor for B_n with non-crossing-partition simples."""

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError("need at least 2 strands")
        super().__init__()
        self.n = n
        self.name = f"bkl-{n}"
        self.trivial = tuple(range(n))
        self.delta = (0,) * n
        self.norm_of_delta = n - 1
        self.tau_order = n
        self.atoms = tuple(
            self.atom(t, s) for t in range(2, n + 1) for s in range(1, t)
        )
        self._delta_perm = tuple(range(2, n + 1)) + (1,)  # i -> i+1 cyclically
        self._delta_perm_inv = _invert(self._delta_perm)
        self._simples: tuple | None = None

    def atom(self, t: int, s: int) -> tuple:
        """The band generator a_{t,s} as a partition (block {s,t})."""
        if not 1 <= s < t <= self.n:
            raise ValueError(f"band indices ({t},{s}) out of range for {self.name}")
        raw = list(range(self.n))
        raw[t - 1] = raw[s - 1]
        return _canonical_labels(raw)

    # -- permutation view ---------------------------------------------------

    def to_perm(self, s: tuple) -> tuple:
        """Underlying permutation: each block an increasing cycle."""
        im = list(range(1, self.n + 1))
        for b in blocks_of(s):
            for i in range(len(b)):
                im[b[i] - 1] = b[(i + 1) % len(b)]
        return tuple(im)

    def from_perm(self, perm: tuple) -> tuple:
        """Partition whose blocks are the cycles of perm.

        Raises ValueError if some cycle does not traverse its support in
        increasing order or the resulting partition crosses; within this
        structure's arithmetic that never happens for legitimate inputs.
        """
        n = self.n
        labels = [-1] * n
        for start in range(1, n + 1):
            if labels[start - 1] != -1:
                continue
            cyc = [start]
            j = perm[start - 1]
            while j != start:
                cyc.append(j)
                j = perm[j - 1]
            if cyc != sorted(cyc):
                raise ValueError("cycle is not increasing; not a simple element")
            for i in cyc:
                labels[i - 1] = start
        s = _canonical_labels(labels)
        if not is_noncrossing(s):
            raise ValueError("crossing partition; not a simple element")
        return s

    # -- descriptor contract -------------------------------------------------

    def leq(self, a, b) -> bool:
        # prefix order = refinement: every block of a lies inside a block of b
        image: dict = {}
        for la, lb in zip(a, b):
            if la in image:
                if image[la] != lb:
                    return False
            else:
                image[la] = lb
        return True

    def meet_simple(self, a, b):
        return _canonical_labels(list(zip(a, b)))

    def _complement(self, s):
        return self.from_perm(_compose(_invert(self.to_perm(s)), self._delta_perm))

    def _complement_inv(self, s):
        return self.from_perm(_compose(self._delta_perm, _invert(self.to_perm(s))))

    def prod(self, a, b):
        return self.from_perm(_compose(self.to_perm(a), self.to_perm(b)))

    def lquot(self, s, b):
        return self.from_perm(_compose(_invert(self.to_perm(s)), self.to_perm(b)))

    def rquot(self, b, s):
        return self.from_perm(_compose(self.to_perm(b), _invert(self.to_perm(s))))

    def _norm(self, s) -> int:
        return self.n - len(set(s))

    def simples(self) -> tuple:
        if self._simples is None:
            # at this scale, filtering all set partitions is fine
            out = set()
            stack = [((), 0)]
            while stack:
                labels, nblocks = stack.pop()
                i = len(labels)
                if i == self.n:
                    if is_noncrossing(labels):
                        out.add(labels)
                    continue
                for lab in range(nblocks + 1):
                    stack.append((labels + (lab,), max(nblocks, lab + 1)))
            self._simples = tuple(sorted(out))
        return self._simples

    # -- word conversions ----------------------------------------------------

    def simple_to_bands(self, s) -> list:
        """Canonical band-generator word: per block {i_1 < ... < i_k}, the
        descending product (i_k,i_{k-1}), ..., (i_2,i_1); blocks in order of
        minimal element."""
        out = []
        for b in blocks_of(s):
            for i in range(len(b) - 1, 0, -1):
                out.append((b[i], b[i - 1]))
        return out

    def band_to_artin_word(self, t: int, s: int) -> list:
        """a_{t,s} as a word in sigma_k letters (k, +-1)."""
        word = [(k, 1) for k in range(t - 1, s, -1)]
        word.append((s, 1))
        word += [(k, -1) for k in range(s + 1, t)]
        return word


@lru_cache(maxsize=None)
def bkl_structure(n: int) -> BKLStructure:
    """Shared descriptor instance for the dual structure on B_n."""
    return BKLStructure(n)
