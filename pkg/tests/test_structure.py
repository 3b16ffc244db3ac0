import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_subgroups, as_lists, brute_isomorphic, naive_closure, naive_order

from grpcensus import build
from grpcensus.constructions import from_permutations
from grpcensus.core import ElementSet, generated_subgroup, make_group
from grpcensus.enumeration import enumerate_groups
from grpcensus.errors import CapExceeded, NotSubgroup
from grpcensus.numtheory import p_part, prime_divisors
from grpcensus.structure import (
    are_isomorphic, automorphisms, center, centralizer, commutator, commutator_subgroup,
    embedding, find_isomorphism, frattini, is_normal, is_subgroup, maximal_subgroups,
    minimal_generating_set, normalizer, subgroup_as_group, subgroup_lattice, sylow,
    sylow_greedy)

SMALL = ["C(1)", "C(6)", "C(8)", "D(6)", "D(8)", "Q(8)", "D(10)", "D(12)", "Q(12)", "A(4)",
         "E(2,3)", "C(2)xC(4)", "C(2)xC(6)", "C(3)xC(3)"]
GROUPS = {s: build(s) for s in SMALL}


def as_set(H):
    return frozenset(H.indices().tolist())


@pytest.mark.parametrize("spec", SMALL)
def test_center_and_centralizers(spec):
    G = GROUPS[spec]
    t = as_lists(G)
    n = G.order
    z = {a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n))}
    assert as_set(center(G)) == z
    for x in range(n):
        assert as_set(centralizer(G, x)) == {a for a in range(n) if t[a][x] == t[x][a]}


@pytest.mark.parametrize("spec", SMALL)
def test_lattice_matches_subset_enumeration(spec):
    G = GROUPS[spec]
    t = as_lists(G)
    brute = set(all_subgroups(t))
    lat = subgroup_lattice(G)
    assert {as_set(H) for H in lat.subgroups} == brute
    assert len(lat) == len(brute)
    sizes = [H.size for H in lat.subgroups]
    assert sizes == sorted(sizes)
    for i, j in lat.inclusion:
        A, B = lat.subgroups[i], lat.subgroups[j]
        assert A < B
        assert not any(A < C < B for C in lat.subgroups)


@pytest.mark.parametrize("spec", SMALL)
def test_normality_and_normalizers(spec):
    G = GROUPS[spec]
    t = as_lists(G)
    n = G.order
    inv = [next(b for b in range(n) if t[a][b] == 0) for a in range(n)]
    for H in subgroup_lattice(G).subgroups:
        S = as_set(H)
        conj = lambda g: {t[t[inv[g]][h]][g] for h in S}  # noqa: E731
        assert is_normal(G, H) == all(conj(g) == S for g in range(n))
        assert as_set(normalizer(G, H)) == {g for g in range(n) if conj(g) == S}


def test_normal_rejects_non_subgroup():
    G = GROUPS["D(8)"]
    with pytest.raises(NotSubgroup):
        is_normal(G, ElementSet.from_indices(8, [0, 1]))
    with pytest.raises(NotSubgroup):
        normalizer(G, ElementSet.from_indices(8, [1]))


@pytest.mark.parametrize("spec", SMALL)
def test_commutator_subgroup(spec):
    G = GROUPS[spec]
    t = as_lists(G)
    n = G.order
    comms = {commutator(G, a, b) for a in range(n) for b in range(n)}
    assert as_set(commutator_subgroup(G)) == naive_closure(t, comms)
    assert (commutator_subgroup(G).size == 1) == G.is_abelian


@pytest.mark.parametrize("spec", SMALL)
def test_frattini_and_maximal(spec):
    G = GROUPS[spec]
    subs = all_subgroups(as_lists(G))
    proper = [S for S in subs if len(S) < G.order]
    maximal = [S for S in proper if not any(S < T for T in proper)]
    assert {as_set(M) for M in maximal_subgroups(G)} == set(maximal)
    phi = frozenset.intersection(*maximal) if maximal else frozenset(range(G.order))
    assert as_set(frattini(G)) == phi


def test_frattini_values():
    assert frattini(GROUPS["Q(8)"]) == center(GROUPS["Q(8)"])
    assert frattini(GROUPS["C(8)"]).size == 4
    assert frattini(GROUPS["E(2,3)"]).size == 1
    assert frattini(GROUPS["C(2)xC(4)"]).size == 2


@pytest.mark.parametrize("spec", SMALL + ["S(4)", "A(5)", "D(30)"])
def test_sylow_sizes(spec):
    G = build(spec)
    for p in prime_divisors(G.order):
        P = sylow(G, p)
        assert P.size == p_part(G.order, p)
        assert is_subgroup(G, P)
        assert set(G.orders[P.indices()].tolist()) <= {p ** k for k in range(12)}
        Q = sylow_greedy(G, p)
        assert Q.size == P.size


@pytest.mark.parametrize("spec", SMALL)
def test_minimal_generating_set(spec):
    G = GROUPS[spec]
    gens = minimal_generating_set(G)
    assert generated_subgroup(G, gens).size == G.order
    t = as_lists(G)
    for r in range(len(gens)):
        for combo in itertools.combinations(range(G.order), r):
            assert len(naive_closure(t, combo)) < G.order


def test_subgroup_as_group_and_embedding():
    G = GROUPS["D(12)"]
    H = generated_subgroup(G, [2])
    K = subgroup_as_group(G, H, "K")
    assert K.order == 3 and K.label == "K"
    emb = embedding(G, H)
    for a in range(3):
        for b in range(3):
            assert emb[K.table[a, b]] == G.table[emb[a], emb[b]]


def _relabel(G, sigma):
    n = G.order
    t = np.empty((n, n), dtype=np.int64)
    t[sigma[:, None], sigma[None, :]] = sigma[G.table.astype(np.int64)]
    return make_group(t)


@pytest.fixture(scope="module")
def reps_to_12():
    out = []
    for n in range(1, 13):
        out += enumerate_groups(n).representatives
    return out


def test_isomorphism_agrees_with_brute_force(reps_to_12):
    rng = np.random.default_rng(7)
    pool = list(reps_to_12)
    for G in reps_to_12:
        if G.order > 1:
            pool.append(_relabel(G, np.array([0, *rng.permutation(np.arange(1, G.order))])))
    for A, B in itertools.combinations(pool, 2):
        if A.order != B.order:
            continue
        fast = find_isomorphism(A, B)
        assert (fast is not None) == brute_isomorphic(as_lists(A), as_lists(B))
        if fast is not None:
            assert fast.is_bijective()
            for a in range(A.order):
                for b in range(A.order):
                    assert fast(A.table[a, b]) == B.table[fast(a), fast(b)]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_isomorphic_to_relabeled_copy(spec, data):
    G = GROUPS[spec]
    n = G.order
    rest = data.draw(st.permutations(list(range(1, n)))) if n > 1 else []
    H = _relabel(G, np.array([0, *rest]))
    assert are_isomorphic(G, H)


def test_named_isomorphisms():
    perm_d10 = from_permutations(5, [[1, 2, 3, 4, 0], [0, 4, 3, 2, 1]])
    assert are_isomorphic(perm_d10, GROUPS["D(10)"])
    assert not are_isomorphic(GROUPS["D(8)"], GROUPS["Q(8)"])
    assert are_isomorphic(GROUPS["C(2)xC(6)"], build("C(2)xC(2)xC(3)"))


@pytest.mark.parametrize("spec,size", [("C(8)", 4), ("D(8)", 8), ("Q(8)", 24), ("D(6)", 6),
                                       ("E(2,3)", 168), ("C(2)xC(4)", 8), ("A(4)", 24)])
def test_automorphism_counts(spec, size):
    auts = automorphisms(GROUPS[spec])
    assert len(auts) == size
    assert len({a.images.tobytes() for a in auts}) == size


def test_automorphism_cap():
    with pytest.raises(CapExceeded):
        automorphisms(build("C(65)"))


def test_lattice_s4_and_counts():
    assert len(subgroup_lattice(build("S(4)"))) == 30
    assert len(subgroup_lattice(GROUPS["Q(8)"])) == 6
    assert len(subgroup_lattice(GROUPS["D(6)"])) == 6


def test_order_oracle_consistency():
    G = GROUPS["A(4)"]
    t = as_lists(G)
    assert [naive_order(t, a) for a in range(12)] == G.orders.tolist()
