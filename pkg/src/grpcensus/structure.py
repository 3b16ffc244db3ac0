"""Subgroup machinery: centers, normality, lattices, Sylow subgroups and
isomorphism testing."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .core import (
    ElementSet,
    Group,
    Morphism,
    _frozen,
    generated_subgroup,
    make_group,
)
from .errors import CapExceeded, NotSubgroup
from .numtheory import p_part, prime_divisors

LATTICE_CAP = 256
ISO_CAP = 512
AUTOMORPHISM_CAP = 64


def is_subgroup(G: Group, H: ElementSet) -> bool:
    if H.owner_order != G.order or not H.members[0]:
        return False
    idx = H.indices()
    if not H.members[G.inverse[idx]].all():
        return False
    return bool(H.members[G.table[np.ix_(idx, idx)]].all())


def _require_subgroup(G: Group, H: ElementSet):
    if not is_subgroup(G, H):
        raise NotSubgroup(f"{H!r} is not a subgroup of {G!r}")


def center(G: Group) -> ElementSet:
    return ElementSet(G.order, (G.table == G.table.T).all(axis=1))


def centralizer(G: Group, x: int) -> ElementSet:
    return ElementSet(G.order, G.table[:, x] == G.table[x, :])


def centralizer_of_set(G: Group, H: ElementSet) -> ElementSet:
    idx = H.indices()
    return ElementSet(G.order, (G.table[:, idx] == G.table[idx, :].T).all(axis=1))


def is_normal(G: Group, H: ElementSet) -> bool:
    _require_subgroup(G, H)
    idx = H.indices()
    # g^-1 h g for every g (rows) and h (columns)
    conj = G.table[G.table[G.inverse[:, None], idx[None, :]], np.arange(G.order)[:, None]]
    return bool(H.members[conj].all())


def normalizer(G: Group, H: ElementSet) -> ElementSet:
    _require_subgroup(G, H)
    idx = H.indices()
    conj = G.table[G.table[G.inverse[:, None], idx[None, :]], np.arange(G.order)[:, None]]
    return ElementSet(G.order, H.members[conj].all(axis=1))


def commutator(G: Group, a: int, b: int) -> int:
    """[a, b] = a^-1 b^-1 a b."""
    t, inv = G.table, G.inverse
    return int(t[t[t[inv[a], inv[b]], a], b])


def commutator_subgroup(G: Group) -> ElementSet:
    t, inv = G.table, G.inverse
    n = G.order
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    comms = np.unique(t[t[t[inv[a], inv[b]], a], b])
    return generated_subgroup(G, comms)


def subgroup_as_group(G: Group, H: ElementSet, label: Optional[str] = None) -> Group:
    """Re-index H as a group; its elements keep ascending original order."""
    _require_subgroup(G, H)
    idx = H.indices()
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    return make_group(pos[G.table[np.ix_(idx, idx)]], label)


def embedding(G: Group, H: ElementSet) -> np.ndarray:
    """Original indices of the elements of ``subgroup_as_group(G, H)``."""
    return H.indices()


# -- lattice ---------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupLattice:
    """All subgroups sorted by size then bit order, with covering pairs."""

    subgroups: tuple
    inclusion: tuple

    def __len__(self):
        return len(self.subgroups)

    def maximal(self) -> list[ElementSet]:
        top = self.subgroups[-1]
        covered_by_top = {i for i, j in self.inclusion if self.subgroups[j] == top}
        return [self.subgroups[i] for i in sorted(covered_by_top)]


def _cyclic_seeds(G: Group) -> list[int]:
    reps = kernels.cyclic_representatives(G.table, G.orders)
    return sorted(set(int(r) for r in reps))


def subgroup_lattice(G: Group, *, with_inclusion: bool = True) -> SubgroupLattice:
    """Every subgroup, found by joining cyclic seeds to a fixed point.

    Each subgroup is a join of cyclic subgroups, so closing the set under
    "join with one more cyclic seed" reaches all of them.
    """
    if G.order > LATTICE_CAP:
        raise CapExceeded(f"subgroup lattice capped at order {LATTICE_CAP}, got {G.order}")
    cached = G.__dict__.get("_lattice")
    if cached is not None and (cached.inclusion or not with_inclusion):
        return cached
    seeds = _cyclic_seeds(G)
    n = G.order
    start = np.zeros(n, dtype=np.bool_)
    start[0] = True
    found = {}  # key -> (mask, generators)
    trivial = ElementSet(n, start)
    found[trivial] = ()
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            gens = found[H]
            for s in seeds:
                if H.members[s]:
                    continue
                new_gens = gens + (s,)
                K = ElementSet(n, kernels.right_closure(
                    G.table, np.array(new_gens, dtype=np.int64), start))
                if K not in found:
                    found[K] = new_gens
                    nxt.append(K)
        frontier = nxt
    subs = tuple(sorted(found, key=ElementSet.sort_key))
    inclusion = ()
    if with_inclusion:
        inclusion = tuple(_covering_pairs(subs))
    lat = SubgroupLattice(subs, inclusion)
    G.__dict__["_lattice"] = lat
    return lat


def _covering_pairs(subs):
    masks = np.array([s.members for s in subs])
    sizes = masks.sum(axis=1)
    # contains[i, j]: subs[i] <= subs[j]
    contains = (masks.astype(np.int32) @ masks.T.astype(np.int32)) == sizes[:, None]
    pairs = []
    for i in range(len(subs)):
        uppers = [j for j in np.flatnonzero(contains[i]) if sizes[j] > sizes[i]]
        for j in uppers:
            if not any(contains[k, j] and sizes[k] < sizes[j] for k in uppers if k != j):
                pairs.append((i, int(j)))
    return pairs


def maximal_subgroups(G: Group) -> list[ElementSet]:
    return subgroup_lattice(G).maximal()


def frattini(G: Group) -> ElementSet:
    maxima = maximal_subgroups(G)
    result = ElementSet.full(G.order)
    for M in maxima:
        result = result & M
    return result


# -- Sylow ------------------------------------------------------------------

def sylow(G: Group, p: int) -> ElementSet:
    """A Sylow p-subgroup (``{0}`` when p does not divide |G|)."""
    if G.order % p:
        return ElementSet.from_indices(G.order, [0])
    if G.order <= LATTICE_CAP:
        target = p_part(G.order, p)
        for H in reversed(subgroup_lattice(G, with_inclusion=False).subgroups):
            if H.size == target:
                return H
    return sylow_greedy(G, p)


def sylow_greedy(G: Group, p: int) -> ElementSet:
    """Grow a p-subgroup by adjoining p-elements; restart from each seed.

    Candidates are normalising p-elements first, which keeps the closure a
    p-group; restarts walk p-elements in index order.
    """
    target = p_part(G.order, p)
    if target == 1:
        return ElementSet.from_indices(G.order, [0])
    orders = G.orders
    pelems = [int(x) for x in range(1, G.order) if p_part(int(orders[x]), p) == orders[x]]
    best = ElementSet.from_indices(G.order, [0])
    for seed in pelems:
        gens = [seed]
        H = generated_subgroup(G, gens)
        grew = True
        while grew and H.size < target:
            grew = False
            N = normalizer(G, H)
            for x in pelems:
                if H.members[x] or not N.members[x]:
                    continue
                K = generated_subgroup(G, gens + [x])
                if K.size == p_part(K.size, p):
                    gens.append(x)
                    H = K
                    grew = True
                    break
        if H.size == target:
            return H
        if H.size > best.size:
            best = H
    return best


# -- generators and isomorphism --------------------------------------------

def _frattini_quotient_rank(G: Group) -> int:
    """Largest dim of G/(G' G^p) over primes p; a lower bound on d(G)."""
    derived = commutator_subgroup(G).indices()
    best = 1 if G.order > 1 else 0
    idx = np.arange(G.order)
    for p in prime_divisors(G.order):
        cur = np.zeros(G.order, dtype=np.int64)
        for _ in range(p):
            cur = G.table[cur, idx]
        powers = np.unique(cur)
        K = generated_subgroup(G, np.concatenate([derived, powers]))
        index = G.order // K.size
        best = max(best, round(math.log(index, p)) if index > 1 else 0)
    return best


def minimal_generating_set(G: Group) -> list[int]:
    """Smallest generating set, first in index order among cyclic-subgroup
    representatives.  Search starts at the Frattini-quotient rank bound."""
    if G.order == 1:
        return []
    cached = G.__dict__.get("_mingens")
    if cached is not None:
        return list(cached)
    seeds = _cyclic_seeds(G)
    seeds = [s for s in seeds if s != 0]
    n = G.order
    start = np.zeros(n, dtype=np.bool_)
    start[0] = True

    def dfs(prefix, closure, k, first):
        if len(prefix) == k:
            return prefix if closure.all() else None
        for i in range(first, len(seeds)):
            s = seeds[i]
            if closure[s]:
                continue
            gens = prefix + [s]
            mask = kernels.right_closure(G.table, np.array(gens, dtype=np.int64), start)
            found = dfs(gens, mask, k, i + 1)
            if found is not None:
                return found
        return None

    k = max(1, _frattini_quotient_rank(G))
    while True:
        found = dfs([], start.copy(), k, 0)
        if found is not None:
            G.__dict__["_mingens"] = tuple(found)
            return found
        k += 1


def _centralizer_sizes(G: Group) -> np.ndarray:
    return (G.table == G.table.T).sum(axis=1)


def iso_invariants(G: Group) -> tuple:
    """Isomorphism invariants used as a prefilter."""
    cached = G.__dict__.get("_iso_inv")
    if cached is not None:
        return cached
    spectrum = tuple(sorted(Counter(zip(G.orders.tolist(),
                                        _centralizer_sizes(G).tolist())).items()))
    inv = (G.order, G.is_abelian, spectrum, center(G).size,
           commutator_subgroup(G).size)
    G.__dict__["_iso_inv"] = inv
    return inv


def find_isomorphism(A: Group, B: Group, *, all_witnesses: bool = False):
    """Witness isomorphism A -> B, or None.

    Backtracks over images of a minimal generating set of A; candidates
    share element order and centraliser size and are tried in ascending
    index order.  With ``all_witnesses`` a list of every isomorphism is
    returned instead.
    """
    for G in (A, B):
        if G.order > ISO_CAP:
            raise CapExceeded(f"isomorphism test capped at order {ISO_CAP}, got {G.order}")
    if iso_invariants(A) != iso_invariants(B):
        return [] if all_witnesses else None
    gens = minimal_generating_set(A)
    if not gens:
        m = Morphism(1, 1, _frozen([0], np.int64))
        return [m] if all_witnesses else m
    cA, cB = _centralizer_sizes(A), _centralizer_sizes(B)
    cands = [np.flatnonzero((B.orders == A.orders[g]) & (cB == cA[g])) for g in gens]
    ta, tb = A.table, B.table
    witnesses = []
    images = np.zeros(len(gens), dtype=np.int64)

    def place(level):
        sub_gens = np.array(gens[:level + 1], dtype=np.int64)
        for c in cands[level]:
            images[level] = c
            status, imgs = kernels.extend_images(ta, tb, sub_gens, images[:level + 1])
            if status:
                continue
            if level + 1 == len(gens):
                m = Morphism(A.order, B.order, _frozen(imgs, np.int64))
                witnesses.append(m)
                if not all_witnesses:
                    return True
            elif place(level + 1):
                return True
        return False

    place(0)
    if all_witnesses:
        return witnesses
    return witnesses[0] if witnesses else None


def are_isomorphic(A: Group, B: Group) -> bool:
    return find_isomorphism(A, B) is not None


def automorphisms(A: Group) -> list[Morphism]:
    """Every automorphism of A by exhaustive witness collection (|A| <= 64)."""
    if A.order > AUTOMORPHISM_CAP:
        raise CapExceeded(f"automorphism enumeration capped at order {AUTOMORPHISM_CAP}")
    return find_isomorphism(A, A, all_witnesses=True)
