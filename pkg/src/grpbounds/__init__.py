"""Finite-group engine for exponent bounds over nilpotent normal
series: enumerated permutation groups, subgroup lattices, invariants,
and the series-minimum search with certifying witnesses."""

from .group import Group, ClosureOverflow, DEFAULT_CAP
from .subgroups import SubgroupSet, all_subgroups, normal_subgroups, \
    partial_complements, fitting, span, is_normal
from .invariants import (InvariantReport, exponent, generator_exponent,
                         derived_subgroup, lower_central_series,
                         nilpotency_class, is_nilpotent, is_solvable,
                         is_regular, report)
from .iso import is_isomorphic
from .rsearch import (BoundRule, RWitness, DEFAULT_RULES, NoSeriesError,
                      lcm_frontier, r_value, r_prime, check_witness)
from .build import cyclic, dihedral, elementary_abelian, direct_product, \
    wreath

__all__ = [
    "Group", "ClosureOverflow", "DEFAULT_CAP", "SubgroupSet",
    "all_subgroups", "normal_subgroups", "partial_complements", "fitting",
    "span", "is_normal", "InvariantReport", "exponent",
    "generator_exponent", "derived_subgroup", "lower_central_series",
    "nilpotency_class", "is_nilpotent", "is_solvable", "is_regular",
    "report", "is_isomorphic", "BoundRule", "RWitness", "DEFAULT_RULES",
    "NoSeriesError", "lcm_frontier", "r_value", "r_prime", "check_witness",
    "cyclic", "dihedral", "elementary_abelian", "direct_product", "wreath",
]
