"""Structure-generic Garside element arithmetic.

Elements of a Garside group are kept in left normal form Delta^p x_1 ... x_r,
where every factor is a simple element strictly between the trivial element
and Delta, and every adjacent pair (x_i, x_{i+1}) is left weighted.  All
operations here are written against the descriptor contract in
:class:`GarsideStructure`, so the same code drives every concrete structure.

Simple elements are plain hashable values (tuples in practice); the
descriptor owns their semantics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GarsideStructure:
    """Contract a concrete finite-type Garside structure must satisfy.

    Subclasses provide the primitive operations on simple elements; this
    base class supplies derived operations (complement powers, tau powers,
    right meets) and small memo caches for the hot unary operations.

    Attributes that subclasses must set: ``name``, ``atoms`` (tuple of
    simples, fixed order), ``delta``, ``trivial``, ``norm_of_delta`` and
    ``tau_order`` (the order of tau as a permutation of the simples).
    """

    name: str
    atoms: tuple
    delta: object
    trivial: object
    norm_of_delta: int
    tau_order: int

    def __init__(self) -> None:
        self._complement_cache: dict = {}
        self._complement_inv_cache: dict = {}
        self._tau_cache: dict = {}
        self._tau_inv_cache: dict = {}
        self._norm_cache: dict = {}

    # -- primitives a subclass must implement ------------------------------

    def is_trivial(self, s) -> bool:
        return s == self.trivial

    def is_delta(self, s) -> bool:
        return s == self.delta

    def leq(self, a, b) -> bool:
        """Prefix order a <= b on simples."""
        raise NotImplementedError

    def meet_simple(self, a, b):
        """Greatest common prefix of two simples."""
        raise NotImplementedError

    def _complement(self, s):
        """partial(s) = s^-1 Delta."""
        raise NotImplementedError

    def _complement_inv(self, s):
        """partial^-1(s) = Delta s^-1."""
        raise NotImplementedError

    def prod(self, a, b):
        """Product of simples, under the guarantee that it is simple."""
        raise NotImplementedError

    def lquot(self, s, b):
        """s^-1 b, under the guarantee s <= b."""
        raise NotImplementedError

    def rquot(self, b, s):
        """b s^-1, under the guarantee that s is a suffix of b."""
        raise NotImplementedError

    def _norm(self, s) -> int:
        """Letter length of s as a positive word in the atoms."""
        raise NotImplementedError

    def simples(self) -> tuple:
        """All simple elements, in the canonical total order."""
        raise NotImplementedError

    def sort_key(self, s):
        """Key realizing the canonical total order on simples."""
        return s

    # -- cached unary operations -------------------------------------------

    def complement(self, s):
        r = self._complement_cache.get(s)
        if r is None:
            r = self._complement_cache[s] = self._complement(s)
        return r

    def complement_inv(self, s):
        r = self._complement_inv_cache.get(s)
        if r is None:
            r = self._complement_inv_cache[s] = self._complement_inv(s)
        return r

    def tau(self, s):
        r = self._tau_cache.get(s)
        if r is None:
            r = self._tau_cache[s] = self.complement(self.complement(s))
        return r

    def tau_inv(self, s):
        r = self._tau_inv_cache.get(s)
        if r is None:
            r = self._tau_inv_cache[s] = self.complement_inv(self.complement_inv(s))
        return r

    def norm(self, s) -> int:
        r = self._norm_cache.get(s)
        if r is None:
            r = self._norm_cache[s] = self._norm(s)
        return r

    # -- derived operations -------------------------------------------------

    def tau_pow(self, s, k: int):
        k %= self.tau_order
        if 2 * k > self.tau_order:
            for _ in range(self.tau_order - k):
                s = self.tau_inv(s)
        else:
            for _ in range(k):
                s = self.tau(s)
        return s

    def complement_pow(self, s, k: int):
        """k-th power of the complement map; partial^2 = tau."""
        k %= 2 * self.tau_order
        s = self.tau_pow(s, k // 2)
        if k % 2:
            s = self.complement(s)
        return s

    def suffix_leq(self, a, b) -> bool:
        """True iff a is a suffix of b, i.e. b >= a."""
        # b >= a  iff  partial^-1(b) <= partial^-1(a)
        return self.leq(self.complement_inv(b), self.complement_inv(a))

    def right_meet_simple(self, a, b):
        """Greatest common suffix of two simples.

        Greedy: extend a common suffix u on the left by atoms while it stays
        a suffix of both arguments.  Any common suffix strictly below the
        gcd admits such an atom extension, so the loop cannot stall early.
        """
        u = self.trivial
        changed = True
        while changed:
            changed = False
            for t in self.atoms:
                if not self.leq(u, self.complement(t)):
                    continue
                v = self.prod(t, u)
                if self.suffix_leq(v, a) and self.suffix_leq(v, b):
                    u = v
                    changed = True
        return u


class ReverseStructure(GarsideStructure):
    """The reverse Garside structure (G, P^-1, Delta^-1) of a base structure.

    A simple element of the reverse structure is the inverse of a simple
    element of the base structure; we reuse the base encoding, so the value
    s here stands for the group element s^-1.  All operations are derived
    from the base structure through that identification.
    """

    def __init__(self, base: GarsideStructure) -> None:
        super().__init__()
        self.base = base
        self.name = base.name + "-reverse"
        self.atoms = base.atoms
        self.delta = base.delta
        self.trivial = base.trivial
        self.norm_of_delta = base.norm_of_delta
        self.tau_order = base.tau_order

    def leq(self, a, b) -> bool:
        # s^-1 <= t^-1 in the reverse order iff t is a suffix of s... no:
        # a^-1 <= b^-1 over P^-1 iff a b^-1 in P^-1 iff b a^-1 in P,
        # i.e. b >= a in the base structure.
        return self.base.suffix_leq(a, b)

    def meet_simple(self, a, b):
        return self.base.right_meet_simple(a, b)

    def _complement(self, s):
        # (s^-1)^-1 Delta^-1 = s Delta^-1 = (Delta s^-1)^-1
        return self.base.complement_inv(s)

    def _complement_inv(self, s):
        return self.base.complement(s)

    def prod(self, a, b):
        # a^-1 b^-1 = (b a)^-1
        return self.base.prod(b, a)

    def lquot(self, s, b):
        # (s^-1)^-1 b^-1 = s b^-1 = (b s^-1)^-1
        return self.base.rquot(b, s)

    def rquot(self, b, s):
        return self.base.lquot(s, b)

    def _norm(self, s) -> int:
        return self.base.norm(s)

    def simples(self) -> tuple:
        return self.base.simples()

    def sort_key(self, s):
        return self.base.sort_key(s)


@dataclass(frozen=True)
class GarsideElement:
    """A group element in left normal form Delta^p x_1 ... x_r.

    Immutable; equality and hashing go through the normal form, which is
    unique, so these coincide with equality of group elements.
    """

    structure: GarsideStructure = field(compare=False, hash=False)
    p: int
    factors: tuple

    @property
    def inf(self) -> int:
        return self.p

    @property
    def sup(self) -> int:
        return self.p + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def sort_key(self):
        st = self.structure
        return (self.p, len(self.factors), tuple(st.sort_key(f) for f in self.factors))

    def __repr__(self) -> str:
        return f"<{self.structure.name}: p={self.p} factors={list(self.factors)}>"


def local_sliding(st: GarsideStructure, a, b):
    """Make the pair (a, b) left weighted, preserving the product.

    The slid element is s = partial(a) /\\ b; returns (a s, s^-1 b).
    """
    s = st.meet_simple(st.complement(a), b)
    if st.is_trivial(s):
        return a, b
    return st.prod(a, s), st.lquot(s, b)


def _push_factor(st: GarsideStructure, fs: list, c) -> int:
    """Append simple c to the normal-form factor list fs, restoring
    normality by one right-to-left wave of local slidings.

    fs must hold factors all strictly between trivial and Delta; the same
    holds on return.  Returns the Delta power stripped off the front
    (0 or 1).
    """
    if st.is_trivial(c):
        return 0
    if st.is_delta(c):
        fs[:] = [st.tau(f) for f in fs]
        return 1
    fs.append(c)
    i = len(fs) - 2
    while i >= 0:
        a, b = fs[i], fs[i + 1]
        s = st.meet_simple(st.complement(a), b)
        if st.is_trivial(s):
            break
        fs[i] = st.prod(a, s)
        fs[i + 1] = st.lquot(s, b)
        i -= 1
    d = 0
    if fs and st.is_delta(fs[0]):
        del fs[0]
        d = 1
    if fs and st.is_trivial(fs[-1]):
        del fs[-1]
    return d


def _element(st: GarsideStructure, p: int, fs: Sequence) -> GarsideElement:
    return GarsideElement(st, p, tuple(fs))


def identity_element(st: GarsideStructure) -> GarsideElement:
    return _element(st, 0, ())


def delta_power(st: GarsideStructure, k: int) -> GarsideElement:
    return _element(st, k, ())


def from_simple(st: GarsideStructure, s) -> GarsideElement:
    if st.is_trivial(s):
        return identity_element(st)
    if st.is_delta(s):
        return delta_power(st, 1)
    return _element(st, 0, (s,))


def left_normal_form(st: GarsideStructure, word: Iterable) -> GarsideElement:
    """Normal form of a word of (simple, exponent) letters, exponent +-1.

    An inverse letter is rewritten through the complement:
    s^-1 = Delta^-1 partial^-1(s).
    """
    p = 0
    fs: list = []
    for s, e in word:
        if e == 1:
            dp, c = 0, s
        elif e == -1:
            dp, c = -1, st.complement_inv(s)
        else:
            raise ValueError(f"letter exponent must be +-1, got {e}")
        if dp:
            # X Delta^dp = Delta^dp tau^dp(X)
            p += dp
            fs = [st.tau_pow(f, dp) for f in fs]
        p += _push_factor(st, fs, c)
    return _element(st, p, fs)


def multiply(x: GarsideElement, y: GarsideElement) -> GarsideElement:
    st = x.structure
    if st is not y.structure:
        raise ValueError("elements over different structures")
    p = x.p + y.p
    fs = [st.tau_pow(f, y.p) for f in x.factors]
    for c in y.factors:
        p += _push_factor(st, fs, c)
    return _element(st, p, fs)


def inverse(x: GarsideElement) -> GarsideElement:
    """Normal form of x^-1 by the closed formula: for x = Delta^p x_1...x_r,
    x^-1 = Delta^-(p+r) partial^(-2(p+r)+1)(x_r) ... partial^(-2(p+1)+1)(x_1).
    """
    st = x.structure
    r = len(x.factors)
    fs = [
        st.complement_pow(x.factors[r - 1 - j], -2 * (x.p + r - j) + 1)
        for j in range(r)
    ]
    return _element(st, -(x.p + r), fs)


def power(x: GarsideElement, k: int) -> GarsideElement:
    if k < 0:
        return inverse(power(x, -k))
    st = x.structure
    result = identity_element(st)
    sq = x
    while k:
        if k & 1:
            result = multiply(result, sq)
        k >>= 1
        if k:
            sq = multiply(sq, sq)
    return result


def conjugate(x: GarsideElement, c: GarsideElement) -> GarsideElement:
    """x^c = c^-1 x c."""
    return multiply(multiply(inverse(c), x), c)


def conjugate_simple(x: GarsideElement, s) -> GarsideElement:
    """x^s for a simple conjugator s; avoids materializing s^-1 separately.

    s^-1 Delta^p = Delta^p tau^p(s)^-1 and tau^p(s)^-1 = Delta^-1 q with
    q = partial^-1(tau^p(s)), so x^s = Delta^(p-1) q x_1...x_r s.
    """
    st = x.structure
    if st.is_trivial(s):
        return x
    q = st.complement_inv(st.tau_pow(s, x.p))
    p = x.p - 1
    fs: list = []
    p += _push_factor(st, fs, q)
    for c in x.factors:
        p += _push_factor(st, fs, c)
    p += _push_factor(st, fs, s)
    return _element(st, p, fs)


def is_positive(x: GarsideElement) -> bool:
    return x.p >= 0


def prefix_leq(a: GarsideElement, b: GarsideElement) -> bool:
    """a <= b in the prefix order, i.e. a^-1 b positive."""
    return multiply(inverse(a), b).p >= 0


def suffix_geq(a: GarsideElement, b: GarsideElement) -> bool:
    """a >= b in the suffix order, i.e. a b^-1 positive."""
    return multiply(a, inverse(b)).p >= 0


def meet(a: GarsideElement, b: GarsideElement) -> GarsideElement:
    """Greatest common prefix of a and b.

    Greedy atom extension from Delta^min(inf a, inf b); a common prefix
    strictly below the gcd always extends by some atom toward it.
    """
    st = a.structure
    u = delta_power(st, min(a.p, b.p))
    changed = True
    while changed:
        changed = False
        for t in st.atoms:
            v = multiply(u, from_simple(st, t))
            if prefix_leq(v, a) and prefix_leq(v, b):
                u = v
                changed = True
    return u


def right_meet(a: GarsideElement, b: GarsideElement) -> GarsideElement:
    """Greatest common suffix of a and b (the gcd for the >= order)."""
    st = a.structure
    u = delta_power(st, min(a.p, b.p))
    changed = True
    while changed:
        changed = False
        for t in st.atoms:
            v = multiply(from_simple(st, t), u)
            if suffix_geq(a, v) and suffix_geq(b, v):
                u = v
                changed = True
    return u


def join(a: GarsideElement, b: GarsideElement) -> GarsideElement:
    """Least common multiple for the prefix order: a v b = (a^-1 /\\' b^-1)^-1
    where /\\' is the right meet."""
    return inverse(right_meet(inverse(a), inverse(b)))


def right_join(a: GarsideElement, b: GarsideElement) -> GarsideElement:
    """Least common multiple for the suffix order: (a^-1 /\\ b^-1)^-1."""
    return inverse(meet(inverse(a), inverse(b)))


def to_reverse(x: GarsideElement, rev: ReverseStructure) -> GarsideElement:
    """Rewrite x over the reverse structure of x.structure.

    Each base letter g is expressed through reverse letters: g = (g^-1)^-1
    and g^-1 is encoded by the same simple value in the reverse structure.
    """
    if rev.base is not x.structure:
        raise ValueError("reverse structure does not match")
    word = [(rev.delta, -1) for _ in range(x.p)] if x.p >= 0 else [
        (rev.delta, 1) for _ in range(-x.p)
    ]
    word += [(f, -1) for f in x.factors]
    return left_normal_form(rev, word)


def from_reverse(x: GarsideElement, base: GarsideStructure) -> GarsideElement:
    """Inverse of :func:`to_reverse`; the mapping is an involution on words."""
    rev = x.structure
    if not isinstance(rev, ReverseStructure) or rev.base is not base:
        raise ValueError("element is not over the reverse of the given structure")
    word = [(base.delta, -1) for _ in range(x.p)] if x.p >= 0 else [
        (base.delta, 1) for _ in range(-x.p)
    ]
    word += [(f, -1) for f in x.factors]
    return left_normal_form(base, word)
