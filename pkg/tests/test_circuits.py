"""Sliding circuits graph, summit sets, solver and conjugator oracles."""

import pytest

from garside.artin import artin_structure
from garside.bkl import bkl_structure
from garside.circuits import (
    BudgetExceeded,
    Budgets,
    _SCMembership,
    compute_scg,
    compute_sss,
    indecomposable_conjugators,
    minimal_sc_conjugator,
    minimal_sss_conjugator,
    sliding_circuit_set,
    solve_cdp,
    solve_csp,
)
from garside.core import (
    GarsideElement,
    conjugate,
    conjugate_simple,
    delta_power,
    from_simple,
    identity_element,
    inverse,
    join,
    left_normal_form,
    meet,
    multiply,
    power,
    prefix_leq,
)
from garside.sliding import (
    cyclic_sliding,
    in_sc,
    in_sss,
    is_rigid,
    iterated_transport,
    preferred_prefix,
    prefix_product,
    slide_to_circuit,
)

from conftest import random_element


def el(st, ks):
    return left_normal_form(st, [(st.atom(k), 1) for k in ks])


def delta_seed(st):
    """sigma_{n-1} ... sigma_1 as an element of the classical structure."""
    return el(st, list(range(st.n - 1, 0, -1)))


def sss_with_witnesses(x, budgets=None):
    """Independent summit-set enumeration keeping a conjugator per member."""
    budgets = budgets or Budgets()
    st = x.structure
    rep, wit, _ = slide_to_circuit(x)
    out = {rep: wit}
    frontier = [rep]
    while frontier:
        y = frontier.pop()
        for s in st.simples():
            if st.is_trivial(s):
                continue
            z = conjugate_simple(y, s)
            if z.inf == rep.inf and z.canonical_length == rep.canonical_length \
                    and z not in out:
                out[z] = multiply(out[y], from_simple(st, s))
                frontier.append(z)
    return out


def test_benchmark_sets_b4():
    st = artin_structure(4)
    x = el(st, [1, 2, 3])
    assert compute_sss(x) == frozenset(
        {el(st, [1, 2, 3]), el(st, [3, 2, 1]), el(st, [2, 1, 3]), el(st, [1, 3, 2])}
    )
    assert sliding_circuit_set(x) == frozenset(
        {el(st, [2, 1, 3]), el(st, [1, 3, 2])}
    )


def test_sss_of_delta_powers():
    st = artin_structure(4)
    for k in range(-2, 3):
        assert compute_sss(delta_power(st, k)) == frozenset({delta_power(st, k)})
        assert sliding_circuit_set(delta_power(st, k)) == \
            frozenset({delta_power(st, k)})


def test_scg_matches_membership_filter_on_sss():
    """The graph exploration must find exactly the recurrent summit
    elements, with the summit set enumerated independently."""
    st = artin_structure(4)
    for seed in [el(st, [1, 2, 3]), el(st, [3, 2, 1, 2]), delta_seed(st),
                 el(st, [1, 2, 1, 3])]:
        sss = sss_with_witnesses(seed)
        expected = {y for y in sss if in_sc(y)}
        assert sliding_circuit_set(seed) == frozenset(expected)


def test_scg_invariants(rng):
    for st in [artin_structure(4), bkl_structure(4), artin_structure(5)]:
        for _ in range(12):
            x = random_element(st, rng)
            graph = compute_scg(x)
            assert graph.vertices
            index = {v: i for i, v in enumerate(graph.vertices)}
            out_degree = {v: 0 for v in graph.vertices}
            adjacency = {v: set() for v in graph.vertices}
            for a, c, b in graph.arrows:
                assert not st.is_trivial(c)
                assert conjugate_simple(a, c) == b
                out_degree[a] += 1
                adjacency[a].add(b)
                adjacency[b].add(a)
            for v in graph.vertices:
                assert in_sc(v)
                assert out_degree[v] >= 1
                assert out_degree[v] <= len(st.atoms)
                assert conjugate(x, graph.witness_to_base[v]) == v
            # undirected connectivity
            seen = {graph.vertices[0]}
            stack = [graph.vertices[0]]
            while stack:
                for w in adjacency[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            assert seen == set(graph.vertices)


def test_indecomposable_conjugators_against_brute_force():
    for st, seeds in [
        (artin_structure(3), [delta_power(artin_structure(3), 1),
                              el(artin_structure(3), [1])]),
        (artin_structure(4), [el(artin_structure(4), [2, 1, 3]),
                              el(artin_structure(4), [1, 3, 2]),
                              delta_seed(artin_structure(4))]),
    ]:
        for x in seeds:
            rep, _, _ = slide_to_circuit(x)
            member = _SCMembership(rep.inf, rep.canonical_length, Budgets())
            got = indecomposable_conjugators(rep, member)
            successes = [
                s for s in st.simples()
                if not st.is_trivial(s) and member(conjugate_simple(rep, s))
            ]
            minimal = [
                s for s in successes
                if not any(t != s and st.leq(t, s) for t in successes)
            ]
            assert sorted(got) == sorted(minimal)
            # distinct minimal conjugators have trivial meet
            for s in got:
                for t in got:
                    if s != t:
                        assert st.is_trivial(st.meet_simple(s, t))


def test_arrows_stay_inside_sc_b4():
    st = artin_structure(4)
    sc = {el(st, [2, 1, 3]), el(st, [1, 3, 2])}
    graph = compute_scg(el(st, [2, 1, 3]))
    assert set(graph.vertices) == sc
    for a, c, b in graph.arrows:
        assert a in sc and b in sc


def test_scg_vertex_counts():
    st4 = artin_structure(4)
    assert len(compute_scg(el(st4, [1, 2, 3])).vertices) == 2
    st5 = artin_structure(5)
    assert len(compute_scg(delta_seed(st5)).vertices) == 6
    for n in (3, 4, 5):
        st = artin_structure(n)
        assert len(compute_scg(delta_power(st, 1)).vertices) == 1


def test_periodic_seed_counts_small():
    for n in (4, 5, 6):
        st = artin_structure(n)
        d = delta_seed(st)
        assert len(compute_sss(d)) == 2 ** (n - 2)
        assert len(sliding_circuit_set(d)) == 2 ** (n - 2) - 2


def test_solver_b4():
    st = artin_structure(4)
    x, y = el(st, [1, 2, 3]), el(st, [2, 1, 3])
    assert solve_cdp(x, y)
    w = solve_csp(x, y)
    assert conjugate(x, w.conjugator) == y
    w = solve_csp(x, x)
    assert conjugate(x, w.conjugator) == x


def test_solver_distinguishes_classes():
    st = artin_structure(3)
    assert not solve_cdp(el(st, [1]), el(st, [1, 2]))
    assert solve_csp(el(st, [1]), el(st, [1, 2])) is None
    # all atoms are conjugate to each other
    st4 = artin_structure(4)
    assert solve_cdp(el(st4, [1]), el(st4, [3]))
    assert solve_cdp(el(st4, [1]), el(st4, [2]))
    # same summit invariants, different underlying permutation cycle type
    assert not solve_cdp(el(st4, [1, 3]), el(st4, [2, 1]))


def test_solver_random_conjugates(rng):
    for st in [artin_structure(4), bkl_structure(4)]:
        for _ in range(25):
            x = random_element(st, rng, length=rng.randint(0, 5))
            a = random_element(st, rng, length=rng.randint(0, 4))
            y = conjugate(x, a)
            w = solve_csp(x, y)
            assert w is not None
            assert conjugate(x, w.conjugator) == y


def test_gcd_closure_of_sc_and_sss(rng):
    """Conjugators into the invariant sets are closed under meets (and,
    for the summit set, joins)."""
    count = 0
    for st in [artin_structure(4), bkl_structure(4), artin_structure(5)]:
        for _ in range(40):
            x = random_element(st, rng, length=rng.randint(0, 4))
            graph = compute_scg(x)
            sss = sss_with_witnesses(x)
            shift = delta_power(st, st.tau_order * rng.randint(-1, 1))
            verts = sorted(graph.witness_to_base, key=lambda v: v.sort_key())
            a = multiply(graph.witness_to_base[rng.choice(verts)], shift)
            b = graph.witness_to_base[rng.choice(verts)]
            assert in_sc(conjugate(x, a)) and in_sc(conjugate(x, b))
            assert in_sc(conjugate(x, meet(a, b)))
            members = sorted(sss, key=lambda v: v.sort_key())
            a = multiply(sss[rng.choice(members)], shift)
            b = sss[rng.choice(members)]
            assert in_sss(conjugate(x, meet(a, b)))
            assert in_sss(conjugate(x, join(a, b)))
            count += 1
    assert count >= 100


def rigid_length_two_seeds(st):
    out = []
    for a in st.simples():
        if st.is_trivial(a) or st.is_delta(a):
            continue
        for b in st.simples():
            if st.is_trivial(b) or st.is_delta(b):
                continue
            if not st.is_trivial(st.meet_simple(st.complement(a), b)):
                continue
            x = GarsideElement(st, 0, (a, b))
            if is_rigid(x):
                out.append(x)
    return out


def test_rigid_classes_sc_is_rigid_conjugates_exhaustive_b4():
    """For a rigid seed, the sliding circuits are exactly the rigid
    conjugates; checked against the independently enumerated summit set."""
    st = artin_structure(4)
    seeds = rigid_length_two_seeds(st)
    assert seeds
    seen_classes = set()
    for x in seeds:
        sc = sliding_circuit_set(x)
        if sc in seen_classes:
            continue
        seen_classes.add(sc)
        sss = sss_with_witnesses(x)
        assert sc == frozenset(y for y in sss if is_rigid(y))
        assert all(in_sc(y) for y in sc)


def test_minimal_conjugator_example_b4():
    st = artin_structure(4)
    x = el(st, [3, 2, 1])
    c = minimal_sc_conjugator(x)
    assert c == el(st, [3])
    p = from_simple(st, preferred_prefix(x))
    assert p == el(st, [3, 2])
    assert prefix_leq(c, p) and c != p


def test_minimal_conjugator_trivial_on_members(rng):
    st = artin_structure(4)
    for seed in [el(st, [2, 1, 3]), el(st, [1, 3, 2]), delta_power(st, 1)]:
        assert minimal_sc_conjugator(seed) == identity_element(st)
    for _ in range(10):
        x = random_element(st, rng)
        rep, _, _ = slide_to_circuit(x)
        assert minimal_sc_conjugator(rep) == identity_element(st)
        assert minimal_sss_conjugator(rep) == identity_element(st)


def test_minimal_conjugator_on_rigid_classes_is_sliding(rng):
    """Toward a rigid circuit, iterated cyclic sliding gives the minimal
    positive conjugator, and minimal conjugators transport onto each other."""
    st = artin_structure(4)
    checked = 0
    for x in rigid_length_two_seeds(st)[:2]:
        for y in sorted(sss_with_witnesses(x), key=lambda v: v.sort_key()):
            c = minimal_sc_conjugator(y)
            # c(y) = P_i(y) once the trajectory has entered its circuit
            _, _, traj = slide_to_circuit(y)
            m = traj.entry_index
            for i in range(m, m + 3):
                assert prefix_product(y, i) == c
            # transport coherence along the trajectory
            z = y
            for k in range(1, 4):
                z = cyclic_sliding(z)
                assert iterated_transport(c, y, k) == minimal_sc_conjugator(z)
            checked += 1
    assert checked >= 4


def test_mu_bijection_counts_b4():
    st = artin_structure(4)
    for s in st.simples():
        if st.is_trivial(s) or st.is_delta(s):
            continue
        x = multiply(delta_power(st, 1), from_simple(st, s))
        y = from_simple(st, st.complement(s))
        assert len(compute_sss(x)) == len(compute_sss(y))
        assert len(sliding_circuit_set(x)) == len(sliding_circuit_set(y))


def test_membership_chain_on_length_one_classes_b4():
    from garside.sliding import in_rsss, in_uss

    st = artin_structure(4)
    covered = set()
    for s in st.simples():
        if st.is_trivial(s) or st.is_delta(s):
            continue
        x = from_simple(st, s)
        if x in covered:
            continue
        sss = compute_sss(x)
        covered.update(sss)
        for y in sss:
            assert in_sss(y)
            if in_rsss(y):
                assert in_uss(y)
            if in_sc(y):
                assert in_rsss(y)
        # ell_s = 1 collapses the middle of the chain
        assert all(in_rsss(y) and in_uss(y) for y in sss)


def test_budget_exhaustion_is_loud():
    st = artin_structure(4)
    x = el(st, [1, 2, 3])
    with pytest.raises(BudgetExceeded):
        compute_scg(x, Budgets(max_vertices=1))
    with pytest.raises(BudgetExceeded):
        compute_sss(x, Budgets(max_set_size=2))
    with pytest.raises(BudgetExceeded):
        minimal_sc_conjugator(el(st, [3, 2, 1]), Budgets(max_conjugator_norm=0))


def test_conjugator_search_rejects_non_members():
    st = artin_structure(4)
    member = _SCMembership(0, 1, Budgets())
    with pytest.raises(ValueError):
        indecomposable_conjugators(el(st, [1, 2, 3]), member)
