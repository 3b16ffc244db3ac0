"""Cyclic-subgroup census: element orders, counts c_k, |C(G)| and deficiency."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import ElementSet, Group, exponent
from .numtheory import prime_divisors, totient


@dataclass(frozen=True)
class CyclicCensus:
    """Counts of cyclic subgroups by order.

    ``c`` only holds realised orders.  ``delta`` is ``|G| - |C(G)|``.
    """

    group_order: int
    c: dict
    pi_e: tuple
    pi: tuple
    pi_c: tuple
    num_cyclic: int
    delta: int

    def count(self, k: int) -> int:
        return self.c.get(k, 0)

    @property
    def order_sum(self) -> int:
        """Sum of c_k * phi(k); equals the group order."""
        return sum(ck * totient(k) for k, ck in self.c.items())

    @property
    def excess_sum(self) -> int:
        """Sum of c_k * (phi(k) - 1); equals the deficiency."""
        return sum(ck * (totient(k) - 1) for k, ck in self.c.items())

    @property
    def identity_order_sum(self) -> bool:
        return self.order_sum == self.group_order

    @property
    def identity_eq1(self) -> bool:
        return self.excess_sum == self.delta


def cyclic_subgroup(G: Group, x: int) -> ElementSet:
    """<x> by walking powers of x."""
    mask = np.zeros(G.order, dtype=bool)
    y = 0
    for _ in range(int(G.orders[x])):
        mask[y] = True
        y = int(G.table[y, x])
    return ElementSet(G.order, mask)


def cyclic_subgroups(G: Group) -> set[ElementSet]:
    return {cyclic_subgroup(G, x) for x in range(G.order)}


def census(G: Group) -> CyclicCensus:
    counts = Counter(s.size for s in cyclic_subgroups(G))
    c = dict(sorted(counts.items()))
    pi_e = tuple(sorted(int(k) for k in np.unique(G.orders)))
    pi = tuple(prime_divisors(G.order))
    pi_c = tuple(k for k in pi_e if k != 1 and k not in pi)
    num_cyclic = sum(c.values())
    return CyclicCensus(G.order, c, pi_e, pi, pi_c, num_cyclic, G.order - num_cyclic)


def count_of_order(G: Group, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return census(G).count(k)


def deficiency(G: Group) -> int:
    return census(G).delta


def is_elementary_abelian_2(G: Group) -> bool:
    return G.is_abelian and exponent(G) <= 2
