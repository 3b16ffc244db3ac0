"""Group families as validated Cayley tables.

Element orderings are fixed so tables are reproducible:

* ``cyclic(n)``: element i is g^i.
* ``dihedral(2n)``: r^k at index k, r^k s at index n + k.
* ``dicyclic(4n)``: a^k at index k, a^k b at index 2n + k.
* symmetric / alternating / permutation groups: permutations sorted
  lexicographically by image tuple (identity first); ``p*q`` applies p
  first, then q.
* products: pair (a, b) at index ``a*|B| + b``.
* quotients: cosets ordered by their smallest member.
"""
from __future__ import annotations

import itertools
from typing import Mapping, Optional, Sequence

import numpy as np

from .core import (
    MAX_ORDER,
    ElementSet,
    Group,
    Morphism,
    extend_morphism,
    identity_morphism,
    is_homomorphism,
    make_group,
)
from .errors import (
    ActionNotHomomorphism,
    CapExceeded,
    GroupError,
    NotCentral,
    NotIsomorphism,
    NotNormal,
    NotSubgroup,
)
from .numtheory import is_prime
from .structure import center, is_normal, is_subgroup, subgroup_as_group

MAX_PERM_DEGREE = 10
MAX_SYMMETRIC_DEGREE = 6


def _check_cap(n):
    if n > MAX_ORDER:
        raise CapExceeded(f"order {n} exceeds the table cap {MAX_ORDER}")


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic order must be positive")
    _check_cap(n)
    i = np.arange(n)
    return make_group((i[:, None] + i[None, :]) % n, f"C({n})")


def dihedral(two_n: int) -> Group:
    """Dihedral group of order ``two_n``; D(2) = C2 and D(4) = C2 x C2."""
    if two_n < 2 or two_n % 2:
        raise GroupError(f"dihedral order must be even and >= 2, got {two_n}")
    _check_cap(two_n)
    n = two_n // 2
    k = np.arange(n)
    a, b = k[:, None], k[None, :]
    rot = (a + b) % n          # r^a r^b
    rot_ref = n + (a + b) % n  # r^a (r^b s)
    ref_rot = n + (a - b) % n  # (r^a s) r^b
    ref_ref = (a - b) % n      # (r^a s)(r^b s)
    table = np.block([[rot, rot_ref], [ref_rot, ref_ref]])
    return make_group(table, f"D({two_n})")


def dicyclic(four_n: int) -> Group:
    """<a, b | a^2n = 1, b^2 = a^n, a^b = a^-1>; dicyclic(8) is Q8."""
    if four_n < 8 or four_n % 4:
        raise GroupError(f"dicyclic order must be a multiple of 4 and >= 8, got {four_n}")
    _check_cap(four_n)
    n = four_n // 4
    m = 2 * n
    k = np.arange(m)
    a, b = k[:, None], k[None, :]
    table = np.block([
        [(a + b) % m, m + (a + b) % m],
        [m + (a - b) % m, (a - b + n) % m],
    ])
    return make_group(table, f"Q({four_n})")


def _table_from_perms(perms: np.ndarray) -> np.ndarray:
    """Cayley table of a closed, lexicographically sorted permutation list."""
    m, d = perms.shape
    weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
    codes = perms @ weights
    # (p*q)[x] = q[p[x]]
    prods = perms[np.arange(m)[None, :, None], perms[:, None, :]]
    table = np.searchsorted(codes, prods @ weights)
    return table


def _perm_parity(p) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def symmetric(n: int) -> Group:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise CapExceeded(f"symmetric degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    return make_group(_table_from_perms(perms), f"S({n})")


def alternating(n: int) -> Group:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise CapExceeded(f"alternating degree must be in 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    perms = [p for p in itertools.permutations(range(n)) if _perm_parity(p) == 0]
    return make_group(_table_from_perms(np.array(perms, dtype=np.int64)), f"A({n})")


def from_permutations(degree: int, generators: Sequence[Sequence[int]],
                      label: Optional[str] = None) -> Group:
    """Closure of 0-based permutations (image lists) under composition."""
    if not 1 <= degree <= MAX_PERM_DEGREE:
        raise CapExceeded(f"permutation degree must be in 1..{MAX_PERM_DEGREE}, got {degree}")
    gens = [tuple(int(x) for x in g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"{g} is not a permutation of 0..{degree - 1}")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > MAX_ORDER:
                        raise CapExceeded(f"generated group exceeds order {MAX_ORDER}")
        frontier = nxt
    perms = np.array(sorted(seen), dtype=np.int64)
    return make_group(_table_from_perms(perms), label)


def direct_product(A: Group, B: Group, label: Optional[str] = None) -> Group:
    nA, nB = A.order, B.order
    _check_cap(nA * nB)
    ta = A.table.astype(np.int64)
    tb = B.table.astype(np.int64)
    table = ta[:, None, :, None] * nB + tb[None, :, None, :]
    if label is None and A.label and B.label:
        label = f"{A.label}x{B.label}"
    return make_group(table.reshape(nA * nB, nA * nB), label)


def elementary_abelian(p: int, k: int) -> Group:
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if k < 0:
        raise GroupError("rank must be non-negative")
    _check_cap(p ** k)
    G = cyclic(1)
    for _ in range(k):
        G = direct_product(G, cyclic(p)) if G.order > 1 else cyclic(p)
    return G.relabel(f"E({p},{k})")


def automorphism_from_images(A: Group, generator_images: Mapping[int, int]) -> Morphism:
    """The automorphism of A determined by images of a generating set."""
    return extend_morphism(A, A, generator_images)


def _action_table(A: Group, B: Group, action) -> np.ndarray:
    if isinstance(action, Mapping):
        action = [action[b] for b in range(B.order)]
    if len(action) != B.order:
        raise ActionNotHomomorphism("action must give one morphism per element of B")
    phi = np.array([np.asarray(m.images if isinstance(m, Morphism) else m) for m in action],
                   dtype=np.int64)
    for b in range(B.order):
        if np.unique(phi[b]).size != A.order or not is_homomorphism(A, A, phi[b]):
            raise ActionNotHomomorphism(f"action of element {b} is not an automorphism")
    # phi_{b1 b2} = phi_{b1} o phi_{b2}
    for b1 in range(B.order):
        for b2 in range(B.order):
            if not np.array_equal(phi[B.table[b1, b2]], phi[b1][phi[b2]]):
                raise ActionNotHomomorphism(
                    f"action fails on ({b1}, {b2}): phi(b1*b2) != phi(b1) o phi(b2)")
    return phi


def semidirect_product(A: Group, B: Group, action, label: Optional[str] = None) -> Group:
    """A ⋊ B with ``(a1, b1)(a2, b2) = (a1 * phi_b1(a2), b1 * b2)``."""
    nA, nB = A.order, B.order
    _check_cap(nA * nB)
    phi = _action_table(A, B, action)
    ta = A.table.astype(np.int64)
    tb = B.table.astype(np.int64)
    twisted = phi[np.arange(nB)[None, :, None, None], np.arange(nA)[None, None, :, None]]
    first = ta[np.arange(nA)[:, None, None, None], twisted]
    second = tb[np.arange(nB)[None, :, None, None], np.arange(nB)[None, None, None, :]]
    table = first * nB + second
    return make_group(table.reshape(nA * nB, nA * nB), label)


def quotient(G: Group, N: ElementSet, label: Optional[str] = None) -> Group:
    if not is_subgroup(G, N):
        raise NotSubgroup(f"{N!r} is not a subgroup")
    if not is_normal(G, N):
        raise NotNormal(f"{N!r} is not normal")
    nidx = N.indices()
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset[g] < 0:
            coset[G.table[g, nidx]] = len(reps)
            reps.append(g)
    reps = np.array(reps)
    return make_group(coset[G.table[np.ix_(reps, reps)]], label)


def central_product(A: Group, B: Group, zA: ElementSet, zB: ElementSet,
                    ident: Morphism, label: Optional[str] = None) -> Group:
    """(A x B) / {(z, ident(z)^-1)} for central zA, zB identified by ``ident``."""
    for G, Z, name in ((A, zA, "A"), (B, zB, "B")):
        if not is_subgroup(G, Z):
            raise NotSubgroup(f"identified subset of {name} is not a subgroup")
        if not Z <= center(G):
            raise NotCentral(f"identified subgroup of {name} is not central")
    ZA = subgroup_as_group(A, zA)
    ZB = subgroup_as_group(B, zB)
    img = np.asarray(ident.images)
    if (ident.source_order != ZA.order or ident.target_order != ZB.order
            or np.unique(img).size != ZA.order or not is_homomorphism(ZA, ZB, img)):
        raise NotIsomorphism("identification map is not an isomorphism of the central subgroups")
    D = direct_product(A, B)
    za, zb = zA.indices(), zB.indices()
    anti = za * B.order + B.inverse[zb[img]]
    return quotient(D, ElementSet(D.order, anti), label)


def extraspecial(order: int, sign: str) -> Group:
    """Extraspecial 2-group as a central product of D8 / Q8 factors.

    '+' uses only D8 factors; '-' starts from Q8.
    """
    sizes = {8: 1, 32: 2, 128: 3}
    if order not in sizes:
        raise GroupError(f"extraspecial order must be one of {sorted(sizes)}, got {order}")
    if sign not in ("+", "-"):
        raise GroupError(f"sign must be '+' or '-', got {sign!r}")
    E = dicyclic(8) if sign == "-" else dihedral(8)
    c2 = Morphism(2, 2, np.array([0, 1]))
    for _ in range(sizes[order] - 1):
        E = central_product(E, dihedral(8), center(E), center(dihedral(8)), c2)
    return E.relabel(f"ES({sign},{order})")


def ext16(e: int, f: int) -> Group:
    """(C4 x C2) ⋊ C2 where u acts by x -> x^e, w -> w x^(2f).

    C4 x C2 = <x> x <w> with x at index 2 and w at index 1.
    """
    if e not in (1, -1) or f not in (0, 1):
        raise GroupError("ext16 needs e in {+1, -1} and f in {0, 1}")
    C = direct_product(cyclic(4), cyclic(2))
    x, w = 2, 1
    x_img = x if e == 1 else 3 * 2
    w_img = (2 * f) * 2 + 1
    u = automorphism_from_images(C, {x: x_img, w: w_img})
    return semidirect_product(C, cyclic(2), [identity_morphism(C), u], f"EXT16({e},{f})")


def trivial() -> Group:
    return cyclic(1)
