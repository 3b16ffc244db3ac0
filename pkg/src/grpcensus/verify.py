"""Named checks for every numeric and structural claim the classification
of deficiency-3 groups rests on.

Each check returns a :class:`CheckResult`; exceptions inside a check are
reported as failures rather than raised.  Groups are always built through
the construction functions looked up at call time, so a corrupted
constructor shows up as a failing check.
"""
from __future__ import annotations

import traceback
from dataclasses import asdict, dataclass
from functools import cached_property

import numpy as np

from . import constructions
from .census import census, count_of_order, is_elementary_abelian_2
from .core import Morphism, exponent, generated_subgroup
from .corpus import default_corpus
from .enumeration import enumerate_groups, scan_deficiency
from .numtheory import is_prime, p_part, prime_divisors
from .spec_lang import build
from .structure import are_isomorphic, center, frattini, sylow

KNOWN_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5)


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    detail: str

    def as_dict(self):
        return asdict(self)


class Context:
    """Groups shared across checks within one run."""

    def __init__(self, corpus_entries=None, max_enum=12):
        self._entries = corpus_entries
        self.max_enum = max_enum

    @cached_property
    def corpus(self):
        entries = self._entries if self._entries is not None else default_corpus()
        return [(e.line, build(e.spec)) for e in entries]

    @cached_property
    def enumerated(self):
        return {n: enumerate_groups(n) for n in range(1, self.max_enum + 1)}

    def all_groups(self):
        yield from (G for _, G in self.corpus)
        for report in self.enumerated.values():
            yield from report.representatives


def _fmt(pairs):
    return ", ".join(f"{k}={v}" for k, v in pairs)


def check_totient_identities(ctx):
    bad = []
    total = 0
    for G in ctx.all_groups():
        total += 1
        c = census(G)
        if not (c.identity_order_sum and c.identity_eq1):
            bad.append(G.label)
    return not bad, f"{total} groups checked; failures: {bad or 'none'}"


def check_classification_exhaustive(ctx):
    hits = scan_deficiency(range(1, ctx.max_enum + 1), 3)
    found = sorted((h.order, h.name) for h in hits)
    return found == [(8, "Q(8)"), (10, "D(10)")], f"delta=3 classes up to order {ctx.max_enum}: {found}"


def check_classification_family(ctx):
    q8, d10 = constructions.dicyclic(8), constructions.dihedral(10)
    hits = [G for _, G in ctx.corpus if census(G).delta == 3]
    stray = [G.label for G in hits
             if not (are_isomorphic(G, q8) or are_isomorphic(G, d10))]
    return not stray, f"delta=3 corpus groups: {[G.label for G in hits]}; not Q8/D10: {stray or 'none'}"


def check_classification_with_c5(ctx):
    hits = scan_deficiency(range(1, ctx.max_enum + 1), 3)
    found = sorted((h.order, h.name) for h in hits)
    want = [(5, "C(5)"), (8, "Q(8)"), (10, "D(10)")]
    return found == want, f"delta=3 classes up to order {ctx.max_enum}: {found}"


def check_dihedral_deficiency(ctx):
    bad = []
    qs = [q for q in range(3, 98) if is_prime(q)]
    for q in qs:
        d = census(constructions.dihedral(2 * q)).delta
        if d != q - 2:
            bad.append((q, d))
    return not bad, f"q in 3..97 ({len(qs)} primes); mismatches (q, delta): {bad or 'none'}"


def check_small_deficiencies(ctx):
    got = {
        "C6": census(constructions.cyclic(6)).delta,
        "D12": census(constructions.dihedral(12)).delta,
        "S3": census(constructions.symmetric(3)).delta,
    }
    return got == {"C6": 2, "D12": 2, "S3": 1}, _fmt(got.items())


def check_two_group_counts(ctx):
    c = constructions
    q8, d8 = c.dicyclic(8), c.dihedral(8)
    z = center(d8)
    d8d8 = c.central_product(d8, d8, z, z, _c2_identity())
    got = {
        "c4(Q8)": count_of_order(q8, 4),
        "c4(D8)": count_of_order(d8, 4),
        "c4(C4xC4)": count_of_order(c.direct_product(c.cyclic(4), c.cyclic(4)), 4),
        "c4(D8*D8)": count_of_order(d8d8, 4),
        "c6(C2xC2xC3)": count_of_order(
            c.direct_product(c.direct_product(c.cyclic(2), c.cyclic(2)), c.cyclic(3)), 6),
        "exp(Q8)": exponent(q8),
        "|Z(Q8)|": center(q8).size,
    }
    ext = {f"c4(EXT16({e},{f}))": count_of_order(c.ext16(e, f), 4)
           for e in (1, -1) for f in (0, 1)}
    ok = (got["c4(Q8)"] == 3 and got["c4(D8)"] == 1 and got["c4(C4xC4)"] > 3
          and got["c4(D8*D8)"] > 3 and got["c6(C2xC2xC3)"] == 3
          and all(v != 3 for v in ext.values())
          and got["exp(Q8)"] == 4 and got["|Z(Q8)|"] == 2
          and frattini(q8) == center(q8))
    return ok, _fmt(list(got.items()) + list(ext.items())) + f", Phi(Q8)=Z(Q8): {frattini(q8) == center(q8)}"


def _c2_identity():
    return Morphism(2, 2, np.array([0, 1]))


def check_three_prime_bound(ctx):
    tested, bad = [], []
    for _, G in ctx.corpus:
        primes = prime_divisors(G.order)
        if len(primes) >= 3:
            tested.append(G.label)
            d = census(G).delta
            if not d > primes[-1]:
                bad.append((G.label, d, primes[-1]))
    ok = bool(tested) and not bad
    return ok, f"{len(tested)} groups with >= 3 prime divisors; violations: {bad or 'none'}"


def check_elementary_abelian_iff(ctx):
    bad = []
    total = 0
    for G in ctx.all_groups():
        total += 1
        if (census(G).delta == 0) != is_elementary_abelian_2(G):
            bad.append(G.label)
    return not bad, f"{total} groups checked both directions; failures: {bad or 'none'}"


def check_enumeration_counts(ctx):
    counts = tuple(ctx.enumerated[n].count for n in range(1, 13))
    unpruned = tuple(enumerate_groups(n, symmetry=False).count for n in range(1, 9))
    ok = counts == KNOWN_COUNTS and unpruned == KNOWN_COUNTS[:8]
    return ok, f"counts 1..12: {counts}; without symmetry pruning 1..8: {unpruned}"


def check_structure(ctx):
    c = constructions
    bad = []
    for _, G in ctx.corpus:
        if G.order > 256:
            continue
        for p in prime_divisors(G.order):
            if sylow(G, p).size != p_part(G.order, p):
                bad.append((G.label, p))
    C = c.direct_product(c.cyclic(4), c.cyclic(2))
    X = generated_subgroup(C, [2])
    phi_size = frattini(C).size
    quot_exp = exponent(c.quotient(C, X))
    ok = not bad and phi_size == 2 and quot_exp <= 2
    return ok, (f"sylow mismatches: {bad or 'none'}; |Phi(C4xC2)|={phi_size}; "
                f"exp((C4xC2)/<x>)={quot_exp}")


CHECKS = [
    ("totient-identities", "sum c_k phi(k) = |G| and sum c_k (phi(k)-1) = |G| - |C(G)|",
     check_totient_identities),
    ("classification-exhaustive", "|C(G)| = |G| - 3 only for D10 and Q8 (orders <= 12)",
     check_classification_exhaustive),
    ("classification-family-scan", "|C(G)| = |G| - 3 implies G = D10 or Q8 (family corpus)",
     check_classification_family),
    ("classification-with-c5", "|C(G)| = |G| - 3 exactly for C5, Q8, D10 (orders <= 12)",
     check_classification_with_c5),
    ("dihedral-deficiency", "delta(D_2q) = q - 2 for odd primes q", check_dihedral_deficiency),
    ("small-deficiencies", "delta(C6) = delta(D12) = 2, delta(S3) = 1", check_small_deficiencies),
    ("two-group-counts", "c4(Q8) = 3, c4(D8) = 1, c4(C4xC4) > 3, c4(D8*D8) > 3, c6(L) = 3",
     check_two_group_counts),
    ("three-prime-bound", "r >= 3 prime divisors implies delta > p_r", check_three_prime_bound),
    ("elementary-abelian-iff", "delta = 0 iff elementary abelian 2-group",
     check_elementary_abelian_iff),
    ("enumeration-counts", "group counts for orders 1..12 = 1,1,1,2,1,2,1,5,2,2,1,5",
     check_enumeration_counts),
    ("structure-cross-checks", "Sylow orders, |Phi(C4xC2)| = 2, (C4xC2)/<x> elementary",
     check_structure),
]


def run_checks(ctx=None, only=None) -> list[CheckResult]:
    ctx = ctx or Context()
    results = []
    for name, anchor, fn in CHECKS:
        if only is not None and name not in only:
            continue
        try:
            passed, detail = fn(ctx)
        except Exception as exc:  # reported, never raised
            passed = False
            detail = f"{type(exc).__name__}: {exc}"
            tb = traceback.extract_tb(exc.__traceback__)
            if tb:
                detail += f" (at {tb[-1].name})"
        results.append(CheckResult(name, anchor, bool(passed), detail))
    return results
