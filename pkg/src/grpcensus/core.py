"""Finite groups as validated Cayley tables.

Elements are the indices ``0..n-1`` with the identity at index 0.  Tables
are stored as read-only ``int16`` arrays, which covers the order cap of
4096 with room to spare.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

import numpy as np

from . import kernels
from .errors import (
    CapExceeded,
    GeneratorsDontGenerate,
    NoIdentityAtZero,
    NoInverse,
    NotAHomomorphism,
    NotAssociative,
    NotBijective,
    NotClosed,
    NotLatinSquare,
)

MAX_ORDER = 4096


def _frozen(arr, dtype):
    out = np.array(arr, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group given by its multiplication table.

    Build instances through :func:`make_group`, which validates the axioms
    and computes inverses.
    """

    order: int
    table: np.ndarray
    inverse: np.ndarray
    label: Optional[str] = None

    def __repr__(self):
        name = self.label or "Group"
        return f"<{name} order={self.order}>"

    def __len__(self):
        return self.order

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders indexed by element."""
        return _frozen(kernels.element_orders(self.table), np.int64)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def relabel(self, label):
        """Same table, different display label."""
        return Group(self.order, self.table, self.inverse, label)

    def elements(self) -> range:
        return range(self.order)


class ElementSet:
    """A subset of a group's elements held as a membership mask.

    Equality and hashing go through the packed bit vector, so sets built
    from different generators compare equal when they hold the same
    elements.
    """

    __slots__ = ("owner_order", "members", "_key")

    def __init__(self, owner_order: int, members):
        mask = np.zeros(owner_order, dtype=bool)
        members = np.asarray(members)
        if members.dtype == bool:
            if members.shape != (owner_order,):
                raise ValueError("mask length does not match owner order")
            mask[:] = members
        elif members.size:
            mask[members.astype(np.int64)] = True
        mask.setflags(write=False)
        self.owner_order = owner_order
        self.members = mask
        self._key = np.packbits(mask).tobytes()

    @classmethod
    def from_indices(cls, owner_order: int, indices: Iterable[int]):
        return cls(owner_order, np.fromiter(indices, dtype=np.int64))

    @classmethod
    def full(cls, owner_order: int):
        return cls(owner_order, np.ones(owner_order, dtype=bool))

    @property
    def size(self) -> int:
        return int(self.members.sum())

    def __len__(self):
        return self.size

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    def __iter__(self):
        return iter(int(i) for i in self.indices())

    def __contains__(self, x) -> bool:
        return bool(self.members[x])

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.owner_order == other.owner_order and self._key == other._key

    def __hash__(self):
        return hash((self.owner_order, self._key))

    def __le__(self, other: ElementSet) -> bool:
        return bool(np.all(other.members[self.members]))

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self != other

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.owner_order, self.members & other.members)

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.owner_order, self.members | other.members)

    def sort_key(self):
        """Size first, then lexicographic order of the bit vector."""
        return (self.size, tuple(self.indices()))

    def __repr__(self):
        shown = list(self.indices()[:12])
        more = ", ..." if self.size > 12 else ""
        return f"ElementSet({self.owner_order}, {{{', '.join(map(str, shown))}{more}}})"


@dataclass(frozen=True, eq=False)
class Morphism:
    """A map between group tables, ``images[a]`` is the image of ``a``."""

    source_order: int
    target_order: int
    images: np.ndarray = field(repr=False)

    def __call__(self, a: int) -> int:
        return int(self.images[a])

    def is_bijective(self) -> bool:
        return (self.source_order == self.target_order
                and np.unique(self.images).size == self.source_order)

    def compose(self, other: Morphism) -> Morphism:
        """``self ∘ other`` (apply ``other`` first)."""
        return Morphism(other.source_order, self.target_order,
                        _frozen(self.images[other.images], np.int64))


def is_homomorphism(A: Group, B: Group, images) -> bool:
    images = np.asarray(images)
    lhs = images[A.table]
    rhs = B.table[images[:, None], images[None, :]]
    return bool(np.array_equal(lhs, rhs))


def make_group(table, label: Optional[str] = None) -> Group:
    """Validate ``table`` and wrap it as a :class:`Group`.

    Checks, in order: shape and range (NotClosed), identity at index 0,
    Latin square, two-sided inverses, associativity.  Each error carries
    the first offending cell or triple as ``witness``.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotClosed(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if n > MAX_ORDER:
        raise CapExceeded(f"order {n} exceeds the table cap {MAX_ORDER}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise NotClosed("table entries must be integers")
    arr = arr.astype(np.int64)
    bad = np.argwhere((arr < 0) | (arr >= n))
    if bad.size:
        r, c = (int(v) for v in bad[0])
        raise NotClosed(f"entry table[{r}][{c}] = {arr[r, c]} outside 0..{n - 1}", (r, c))
    idx = np.arange(n)
    for name, line in (("row", arr[0]), ("column", arr[:, 0])):
        miss = np.flatnonzero(line != idx)
        if miss.size:
            a = int(miss[0])
            witness = (0, a) if name == "row" else (a, 0)
            raise NoIdentityAtZero(f"index 0 is not an identity: {name} 0 differs at {a}", witness)
    hit = kernels.latin_violation(arr)
    if hit is not None:
        axis, r, c = hit
        what = "row" if axis == 0 else "column"
        raise NotLatinSquare(f"{what} repeats entry {arr[r, c]} at table[{r}][{c}]", (r, c))
    inverse = np.argmax(arr == 0, axis=1)
    bad = np.flatnonzero(arr[inverse, idx] != 0)
    if bad.size:
        a = int(bad[0])
        raise NoInverse(f"element {a} has no two-sided inverse", (a, int(inverse[a])))
    table16 = arr.astype(np.int16)
    triple = kernels.associativity_violation(table16)
    if triple is not None:
        a, b, c = triple
        raise NotAssociative(f"(a*b)*c != a*(b*c) for (a, b, c) = {triple}", triple)
    return Group(n, _frozen(table16, np.int16), _frozen(inverse, np.int64), label)


def mul(G: Group, a: int, b: int) -> int:
    return int(G.table[a, b])


def power(G: Group, a: int, k: int) -> int:
    """``a**k`` by square-and-multiply; negative ``k`` uses the inverse."""
    if k < 0:
        a = int(G.inverse[a])
        k = -k
    result = 0
    base = a
    while k:
        if k & 1:
            result = int(G.table[result, base])
        base = int(G.table[base, base])
        k >>= 1
    return result


def element_order(G: Group, a: int) -> int:
    return int(G.orders[a])


def exponent(G: Group) -> int:
    return math.lcm(*(int(k) for k in np.unique(G.orders)))


def generated_subgroup(G: Group, generators: Iterable[int]) -> ElementSet:
    gens = np.fromiter((int(g) for g in generators), dtype=np.int64)
    start = np.zeros(G.order, dtype=np.bool_)
    start[0] = True
    return ElementSet(G.order, kernels.right_closure(G.table, gens, start))


def conjugate(G: Group, a: int, g: int) -> int:
    """``g^-1 a g``."""
    return int(G.table[G.table[G.inverse[g], a], g])


def extend_morphism(A: Group, B: Group, generator_images: Mapping[int, int],
                    *, require_bijective: bool = True) -> Morphism:
    """Extend images of generators of A to a homomorphism A -> B.

    Image collisions are reported as NotBijective before the relations are
    checked, so a collapsing assignment is always named as such.
    """
    gens = np.array(sorted(generator_images), dtype=np.int64)
    imgs = np.array([generator_images[int(g)] for g in gens], dtype=np.int64)
    if np.any((imgs < 0) | (imgs >= B.order)):
        raise NotAHomomorphism("generator image outside the target group")
    span = generated_subgroup(A, gens)
    if span.size != A.order:
        raise GeneratorsDontGenerate(
            f"generators {list(gens)} span only {span.size} of {A.order} elements")
    # spanning tree: element = parent * generator
    images = np.full(A.order, -1, dtype=np.int64)
    images[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, imgs):
                y = int(A.table[x, g])
                if images[y] < 0:
                    images[y] = B.table[images[x], h]
                    nxt.append(y)
        frontier = nxt
    if require_bijective and (A.order != B.order or np.unique(images).size != A.order):
        raise NotBijective("generator images do not extend to a bijection")
    if not is_homomorphism(A, B, images):
        raise NotAHomomorphism("generator images violate a relation of the source group")
    return Morphism(A.order, B.order, _frozen(images, np.int64))


def identity_morphism(G: Group) -> Morphism:
    return Morphism(G.order, G.order, _frozen(np.arange(G.order), np.int64))
