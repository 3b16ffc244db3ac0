"""Exhaustive enumeration of groups of small order up to isomorphism."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .census import census
from .core import Group, make_group
from .errors import CapExceeded
from .structure import find_isomorphism, iso_invariants

ENUMERATION_CAP = 16
OPT_IN_ABOVE = 12
BATCH = 256


@dataclass
class IsoClassReport:
    order: int
    representatives: list
    stats: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.representatives)


def _check_order(n: int, allow_large: bool):
    if n < 1:
        raise CapExceeded(f"order must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"enumeration capped at order {ENUMERATION_CAP}, got {n}")
    if n > OPT_IN_ABOVE and not allow_large:
        raise CapExceeded(
            f"orders above {OPT_IN_ABOVE} need allow_large=True (got {n})")


class TableSearch:
    """Iterable over every completed Cayley table of order n.

    ``stats`` holds (nodes visited, tables completed) once iteration ends.
    """

    def __init__(self, n: int, symmetry: bool = True):
        self.n = n
        self.symmetry = symmetry
        self.stats = (0, 0)

    def __iter__(self):
        n = self.n
        state = kernels.new_search_state(n)
        out = np.empty((BATCH, n, n), dtype=np.int64)
        while True:
            got = kernels.search_tables(state["T"], state["rowpos"], state["colused"],
                                        state["nextv"], state["k"], state["stats"],
                                        self.symmetry, out)
            for t in range(got):
                yield out[t].copy()
            if got < BATCH:
                break
        self.stats = tuple(int(v) for v in state["stats"])


def canonical_key(G: Group) -> tuple:
    """Sort key for reporting representatives."""
    inv = iso_invariants(G)
    c = census(G)
    return (not inv[1], tuple(sorted(c.c.items())), inv[3], inv[4], inv[2])


def enumerate_groups(n: int, *, allow_large: bool = False,
                     symmetry: bool = True) -> IsoClassReport:
    """One representative per isomorphism class of groups of order n.

    ``symmetry=False`` disables first-use label pruning (a test switch).
    """
    _check_order(n, allow_large)
    reps: list[Group] = []
    by_invariant: dict = {}
    rejections = 0
    completed = 0
    search = TableSearch(n, symmetry)
    for table in search:
        completed += 1
        G = make_group(table)
        key = iso_invariants(G)
        bucket = by_invariant.setdefault(key, [])
        if any(find_isomorphism(G, R) is not None for R in bucket):
            rejections += 1
            continue
        bucket.append(G)
        reps.append(G)
    nodes, done = search.stats
    reps.sort(key=lambda G: (canonical_key(G), G.table.tobytes()))
    reps = [G.relabel(f"G{n}#{i + 1}") for i, G in enumerate(reps)]
    stats = {"nodes": nodes, "tables_completed": done, "iso_rejections": rejections}
    return IsoClassReport(n, reps, stats)


def count_groups(n: int, *, allow_large: bool = False) -> int:
    return enumerate_groups(n, allow_large=allow_large).count


# -- identification and scans -------------------------------------------------

def candidate_names(n: int) -> list[str]:
    """Named groups of order n tried in identification order."""
    from .numtheory import prime_factorization

    names = [f"C({n})"]
    if n >= 6 and n % 2 == 0:
        names.append(f"D({n})")
    if n >= 8 and n % 4 == 0:
        names.append(f"Q({n})")
    fac = prime_factorization(n)
    if len(fac) == 1 and fac[0][1] > 1:
        names.append(f"E({fac[0][0]},{fac[0][1]})")
    if n == 6:
        names.append("S(3)")
    if n == 12:
        names.append("A(4)")
    if n == 16:
        names += [f"EXT16({e},{f})" for e in (1, -1) for f in (0, 1)]
    return names


def identify(G: Group, tag=None):
    """Name of the first candidate isomorphic to G, or ``UNKNOWN(order=n,#k)``."""
    from .spec_lang import build

    for name in candidate_names(G.order):
        if find_isomorphism(G, build(name)) is not None:
            return name
    return f"UNKNOWN(order={G.order},#{tag if tag is not None else '?'})"


@dataclass(frozen=True)
class ScanHit:
    order: int
    name: str
    delta: int
    source: str


def scan_deficiency(orders, target_delta: int, *, groups=None,
                    allow_large: bool = False) -> list[ScanHit]:
    """Every iso-class in ``orders`` (via enumeration) or every group in
    ``groups`` whose deficiency equals ``target_delta``."""
    hits = []
    if groups is None:
        for n in orders:
            report = enumerate_groups(n, allow_large=allow_large)
            for k, G in enumerate(report.representatives, start=1):
                d = census(G).delta
                if d == target_delta:
                    hits.append(ScanHit(n, identify(G, k), d, G.label))
    else:
        wanted = set(orders)
        for tag, G in groups:
            if G.order not in wanted:
                continue
            d = census(G).delta
            if d == target_delta:
                hits.append(ScanHit(G.order, identify(G, tag), d, G.label))
    hits.sort(key=lambda h: (h.order, h.source))
    return hits
