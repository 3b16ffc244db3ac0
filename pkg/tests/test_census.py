from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import as_lists, naive_cyclic_subgroups, naive_order, naive_totient

from grpcensus import build
from grpcensus.census import (
    census, count_of_order, cyclic_subgroup, cyclic_subgroups, deficiency,
    is_elementary_abelian_2)
from grpcensus.core import make_group
from grpcensus.numtheory import divisors, p_part, prime_divisors, prime_factorization, totient

SPECS = ["C(1)", "C(2)", "C(5)", "C(6)", "C(12)", "D(6)", "D(8)", "D(10)", "D(12)", "Q(8)",
         "Q(12)", "E(2,3)", "E(3,2)", "A(4)", "S(4)", "A(5)", "C(2)xC(4)", "C(2)xC(2)xC(3)",
         "EXT16(1,1)", "ES(-,32)", "D(30)"]
GROUPS = {s: build(s) for s in SPECS}


def naive_census(G):
    t = as_lists(G)
    counts = Counter(len(S) for S in naive_cyclic_subgroups(t))
    return dict(sorted(counts.items()))


@pytest.mark.parametrize("spec", SPECS)
def test_counts_match_naive(spec):
    G = GROUPS[spec]
    c = census(G)
    assert c.c == naive_census(G)
    assert c.num_cyclic == sum(c.c.values())
    assert c.delta == G.order - c.num_cyclic


@pytest.mark.parametrize("spec", SPECS)
def test_identities_and_element_counts(spec):
    G = GROUPS[spec]
    c = census(G)
    assert c.identity_order_sum and c.identity_eq1
    t = as_lists(G)
    by_order = Counter(naive_order(t, a) for a in range(G.order))
    for k, v in c.c.items():
        assert v * naive_totient(k) == by_order[k]


@pytest.mark.parametrize("spec,delta", [
    ("C(1)", 0), ("C(2)", 0), ("C(5)", 3), ("C(6)", 2), ("D(6)", 1), ("D(10)", 3),
    ("D(12)", 2), ("Q(8)", 3), ("E(2,3)", 0), ("A(5)", 28)])
def test_known_deficiencies(spec, delta):
    assert deficiency(GROUPS[spec]) == delta


def test_order_sets():
    c = census(GROUPS["C(12)"])
    assert c.pi_e == (1, 2, 3, 4, 6, 12)
    assert c.pi == (2, 3)
    assert c.pi_c == (4, 6, 12)
    a5 = census(GROUPS["A(5)"])
    assert a5.c == {1: 1, 2: 15, 3: 10, 5: 6}
    assert a5.pi_c == ()


def test_count_of_order():
    assert count_of_order(GROUPS["Q(8)"], 4) == 3
    assert count_of_order(GROUPS["D(8)"], 4) == 1
    assert count_of_order(GROUPS["D(8)"], 3) == 0
    with pytest.raises(ValueError):
        count_of_order(GROUPS["D(8)"], 0)


def test_cyclic_subgroup():
    G = GROUPS["C(12)"]
    assert sorted(cyclic_subgroup(G, 4).indices().tolist()) == [0, 4, 8]
    assert len(cyclic_subgroups(G)) == 6


def test_elementary_abelian_predicate():
    assert is_elementary_abelian_2(GROUPS["E(2,3)"])
    assert is_elementary_abelian_2(GROUPS["C(1)"])
    assert not is_elementary_abelian_2(GROUPS["E(3,2)"])
    assert not is_elementary_abelian_2(GROUPS["C(2)xC(4)"])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SPECS[:18]), st.data())
def test_census_invariant_under_relabeling(spec, data):
    G = GROUPS[spec]
    n = G.order
    rest = data.draw(st.permutations(list(range(1, n)))) if n > 1 else []
    sigma = np.array([0, *rest])
    t = np.empty((n, n), dtype=np.int64)
    t[sigma[:, None], sigma[None, :]] = sigma[G.table.astype(np.int64)]
    H = make_group(t)
    assert census(H) == census(G)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5000))
def test_totient_and_divisors(k):
    if k <= 600:
        assert totient(k) == naive_totient(k)
    assert sum(totient(d) for d in divisors(k)) == k
    prod = 1
    for p, e in prime_factorization(k):
        prod *= p ** e
        assert p_part(k, p) == p ** e
    assert prod == k
    assert prime_divisors(k) == [p for p, _ in prime_factorization(k)]
