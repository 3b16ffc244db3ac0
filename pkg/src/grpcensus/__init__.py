"""Finite groups as Cayley tables, cyclic-subgroup censuses and the
classification of groups with |C(G)| = |G| - 3."""
from ._accel import backend
from .census import CyclicCensus, census, count_of_order, cyclic_subgroups, is_elementary_abelian_2
from .constructions import (
    alternating,
    automorphism_from_images,
    central_product,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    ext16,
    extraspecial,
    from_permutations,
    quotient,
    semidirect_product,
    symmetric,
)
from .core import ElementSet, Group, Morphism, conjugate, element_order, exponent, generated_subgroup, make_group, mul, power
from .enumeration import count_groups, enumerate_groups, scan_deficiency
from .numtheory import prime_factorization, totient
from .spec_lang import build, parse_spec
from .structure import (
    are_isomorphic,
    center,
    centralizer,
    commutator_subgroup,
    find_isomorphism,
    frattini,
    is_normal,
    minimal_generating_set,
    normalizer,
    subgroup_as_group,
    subgroup_lattice,
    sylow,
)

__all__ = [
    "alternating",
    "are_isomorphic",
    "automorphism_from_images",
    "backend",
    "build",
    "census",
    "center",
    "central_product",
    "centralizer",
    "commutator_subgroup",
    "conjugate",
    "count_groups",
    "count_of_order",
    "cyclic",
    "cyclic_subgroups",
    "CyclicCensus",
    "dicyclic",
    "dihedral",
    "direct_product",
    "element_order",
    "elementary_abelian",
    "ElementSet",
    "enumerate_groups",
    "exponent",
    "ext16",
    "extraspecial",
    "find_isomorphism",
    "frattini",
    "from_permutations",
    "generated_subgroup",
    "Group",
    "is_elementary_abelian_2",
    "is_normal",
    "make_group",
    "minimal_generating_set",
    "Morphism",
    "mul",
    "normalizer",
    "parse_spec",
    "power",
    "prime_factorization",
    "quotient",
    "scan_deficiency",
    "semidirect_product",
    "subgroup_as_group",
    "subgroup_lattice",
    "sylow",
    "symmetric",
    "totient",
]

__version__ = "0.1.0"
