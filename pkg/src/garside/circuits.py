"""The sliding circuits graph and the conjugacy solver built on it.

SC(x), the set of sliding-circuit conjugates of x, is closed under
conjugation by gcds: whenever two positive elements both conjugate a
vertex back into the set, so does their meet.  Consequently the minimal
nontrivial conjugators at a vertex are simple, there are at most as many
of them as atoms, and the graph they span is finite and connected.  The
solver slides both inputs onto circuits, builds the graph of one, and
looks for the other.

Arrow computation is the deliberately naive full scan over simple
elements, refined per atom through the gcd-closure; good enough for desk
scale, and the only correctness-critical part is the membership test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    GarsideElement,
    conjugate,
    conjugate_simple,
    from_simple,
    identity_element,
    inverse,
    multiply,
)
from .sliding import in_sc, slide_to_circuit, sliding_trajectory


class BudgetExceeded(RuntimeError):
    """A configured enumeration budget ran out.

    Distinct from any mathematical outcome: the computation was cut short
    and nothing can be concluded from partial results.
    """


@dataclass
class Budgets:
    """Caps for the enumerative algorithms; exhaustion raises BudgetExceeded."""

    max_vertices: int = 100_000
    max_set_size: int = 1_000_000
    max_trajectory_states: int = 1_000_000
    max_conjugator_norm: int = 20


class _SCMembership:
    """Memoized sliding-circuit membership for one conjugacy class.

    A cheap invariant filter (inf and canonical length of the target
    circuit) rejects most candidates before any trajectory is computed.
    """

    def __init__(self, inf_s: int, ell_s: int, budgets: Budgets) -> None:
        self.inf_s = inf_s
        self.ell_s = ell_s
        self.budgets = budgets
        self.cache: dict = {}

    def __call__(self, y: GarsideElement) -> bool:
        if y.inf != self.inf_s or y.canonical_length != self.ell_s:
            return False
        r = self.cache.get(y)
        if r is None:
            traj = sliding_trajectory(y, self.budgets.max_trajectory_states)
            circuit = traj.states[traj.entry_index :]
            on = traj.entry_index == 0
            # every state on the found circuit is itself recurrent
            for s in circuit:
                self.cache[s] = True
            for s in traj.states[: traj.entry_index]:
                self.cache[s] = False
            r = on
        return r


def indecomposable_conjugators(y: GarsideElement, member) -> list:
    """Minimal nontrivial simple conjugators keeping y inside the set
    recognized by `member`.

    Baseline: scan all simples s with member(y^s); by gcd-closure the
    minimal candidates above each atom are meets of successes, and the
    result is the set of those that are minimal overall.
    """
    st = y.structure
    if not member(y):
        raise ValueError("element is not in the set; conjugator search undefined")
    per_atom: dict = {}
    for a in st.atoms:
        per_atom[a] = None
    for s in st.simples():
        if st.is_trivial(s):
            continue
        if not member(conjugate_simple(y, s)):
            continue
        for a in st.atoms:
            if st.leq(a, s):
                cur = per_atom[a]
                per_atom[a] = s if cur is None else st.meet_simple(cur, s)
    out = []
    for a in st.atoms:
        c = per_atom[a]
        if c is None:
            continue
        # c is minimal among successes above atom a; keep it only if no
        # success sits strictly below it (i.e. it is minimal overall)
        if all(
            c2 is None or c2 == c or not st.leq(c2, c) for c2 in per_atom.values()
        ) and c not in out:
            out.append(c)
    out.sort(key=st.sort_key)
    return out


@dataclass
class SlidingCircuitsGraph:
    """Vertices are the sliding-circuit conjugates of base; arrows the
    indecomposable simple conjugators between them."""

    base: GarsideElement
    vertices: list = field(default_factory=list)
    arrows: list = field(default_factory=list)  # (source, conjugator, target)
    witness_to_base: dict = field(default_factory=dict)

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


def compute_scg(x: GarsideElement, budgets: Budgets | None = None) -> SlidingCircuitsGraph:
    """Build the full sliding circuits graph of the class of x.

    Seeds with the circuit representative of x, then closes under
    indecomposable conjugators, composing witnesses along the way.
    """
    budgets = budgets or Budgets()
    rep, witness, traj = slide_to_circuit(x, budgets.max_trajectory_states)
    member = _SCMembership(rep.inf, rep.canonical_length, budgets)
    graph = SlidingCircuitsGraph(base=x)
    graph.vertices.append(rep)
    graph.witness_to_base[rep] = witness
    frontier = [rep]
    known = {rep}
    while frontier:
        frontier.sort(key=lambda v: v.sort_key())
        y = frontier.pop(0)
        for s in indecomposable_conjugators(y, member):
            target = conjugate_simple(y, s)
            graph.arrows.append((y, s, target))
            if target not in known:
                if len(known) >= budgets.max_vertices:
                    raise BudgetExceeded(
                        f"sliding circuits graph exceeded {budgets.max_vertices} vertices"
                    )
                known.add(target)
                graph.vertices.append(target)
                graph.witness_to_base[target] = multiply(
                    graph.witness_to_base[y], from_simple(y.structure, s)
                )
                frontier.append(target)
    graph.vertices.sort(key=lambda v: v.sort_key())
    for v, w in graph.witness_to_base.items():
        assert conjugate(x, w) == v, "witness bookkeeping broke"
    return graph


def sliding_circuit_set(x: GarsideElement, budgets: Budgets | None = None) -> frozenset:
    return compute_scg(x, budgets).vertex_set()


@dataclass(frozen=True)
class ConjugatorWitness:
    source: GarsideElement
    target: GarsideElement
    conjugator: GarsideElement

    def __post_init__(self) -> None:
        if conjugate(self.source, self.conjugator) != self.target:
            raise ValueError("witness does not conjugate source to target")


def solve_cdp(x: GarsideElement, y: GarsideElement, budgets: Budgets | None = None) -> bool:
    """Conjugacy decision: do x and y lie in the same conjugacy class?"""
    return solve_csp(x, y, budgets) is not None


def solve_csp(
    x: GarsideElement, y: GarsideElement, budgets: Budgets | None = None
) -> ConjugatorWitness | None:
    """Conjugacy search: a verified witness c with x^c = y, or None."""
    if x.structure is not y.structure:
        raise ValueError("elements over different structures")
    budgets = budgets or Budgets()
    rep_y, wit_y, _ = slide_to_circuit(y, budgets.max_trajectory_states)
    graph = compute_scg(x, budgets)
    if rep_y not in graph.witness_to_base:
        return None
    c = multiply(graph.witness_to_base[rep_y], inverse(wit_y))
    return ConjugatorWitness(x, y, c)


def compute_sss(x: GarsideElement, budgets: Budgets | None = None) -> frozenset:
    """The set of conjugates of minimal canonical length (and, among those,
    maximal infimum): closure of a summit representative under simple
    conjugations that preserve the summit invariants."""
    budgets = budgets or Budgets()
    rep, _, _ = slide_to_circuit(x, budgets.max_trajectory_states)
    st = x.structure
    inf_s, ell_s = rep.inf, rep.canonical_length
    known = {rep}
    frontier = [rep]
    while frontier:
        y = frontier.pop()
        for s in st.simples():
            if st.is_trivial(s):
                continue
            z = conjugate_simple(y, s)
            if z.inf == inf_s and z.canonical_length == ell_s and z not in known:
                if len(known) >= budgets.max_set_size:
                    raise BudgetExceeded(
                        f"summit set exceeded {budgets.max_set_size} elements"
                    )
                known.add(z)
                frontier.append(z)
    return frozenset(known)


def _minimal_conjugator(x: GarsideElement, member, budgets: Budgets) -> GarsideElement:
    """Breadth-first search over positive elements ordered by letter norm
    for the unique minimal c with member(x^c).

    By gcd-closure two successes at the same minimal norm would force a
    success of smaller norm (their meet), so the first success found at
    the minimal norm is the unique minimal conjugator.
    """
    st = x.structure
    e = identity_element(st)
    if member(conjugate(x, e)):
        return e
    layer = {e}
    for _ in range(budgets.max_conjugator_norm):
        nxt = set()
        for c in layer:
            for a in st.atoms:
                nxt.add(multiply(c, from_simple(st, a)))
        hits = [c for c in nxt if member(conjugate(x, c))]
        if hits:
            hits.sort(key=lambda c: c.sort_key())
            assert len(hits) == 1 or all(h == hits[0] for h in hits), (
                "minimal conjugator is not unique; gcd-closure violated"
            )
            return hits[0]
        layer = nxt
    raise BudgetExceeded(
        f"no conjugator into the set within norm {budgets.max_conjugator_norm}"
    )


def minimal_sc_conjugator(
    x: GarsideElement, budgets: Budgets | None = None
) -> GarsideElement:
    """The minimal positive element conjugating x into its sliding circuits.

    Desk-scale oracle by breadth-first search, not a production algorithm.
    """
    budgets = budgets or Budgets()

    def member(y: GarsideElement) -> bool:
        return in_sc(y, budgets.max_trajectory_states)

    return _minimal_conjugator(x, member, budgets)


def minimal_sss_conjugator(
    x: GarsideElement, budgets: Budgets | None = None
) -> GarsideElement:
    """The minimal positive element conjugating x into its super summit set."""
    budgets = budgets or Budgets()
    rep, _, _ = slide_to_circuit(x, budgets.max_trajectory_states)
    inf_s, ell_s = rep.inf, rep.canonical_length

    def member(y: GarsideElement) -> bool:
        return y.inf == inf_s and y.canonical_length == ell_s

    return _minimal_conjugator(x, member, budgets)
