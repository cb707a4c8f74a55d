"""Desk-scale verification toolkit for codegree and order invariants of
finite simple groups."""

from .arith import FactoredNatural, mult_order, p_part, p_prime_part
from .catalog import (
    Family,
    GroupDescriptor,
    canonicalize,
    enumerate_simple_groups,
    order,
)
from .chartab import (
    CharacterTable,
    CodegreeProfile,
    cod_subset,
    codegree_profile,
    divisibility_certificate,
    has_prime_power_codegree,
    is_perfect_by_codegrees,
    parse_table,
    smallest_nontrivial_codegree,
)
from .invariants import (
    ArtinInvariants,
    CyclotomicFactorization,
    artin_invariants,
    cyclotomic_eval,
    cyclotomic_factorization,
    table1_prediction,
)
from .partitions import (
    Partition,
    alternating_defect_zero,
    alternating_degrees,
    b_alternating,
    defect_zero_closed_form,
    f_alternating,
    has_p_core,
    hook_degree,
)

__all__ = [name for name in dir() if not name.startswith("_")]
