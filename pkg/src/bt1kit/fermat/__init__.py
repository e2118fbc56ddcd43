"""Fermat quotient curves y^d = x(1 - x) and Fermat curves of degree d."""

from .closed import (
    a_number_closed,
    a_number_deviation,
    a_number_special,
    encompassing_digit_table,
    encompassing_eo,
    encompassing_invariants,
    encompassing_invariants_from_suffixes,
    encompassing_multiplicity,
    encompassing_suffix_multiplicity,
    encompassing_table,
    half_pattern,
    hermitian_digit_table,
    hermitian_eo,
    hermitian_half_multiplicity,
    hermitian_half_suffix,
    hermitian_half_table,
    hermitian_invariants,
    hermitian_table,
    is_ordinary,
    is_superspecial,
    p2_eo,
    p2_es,
)
from .core import (
    FERMAT,
    FORWARD,
    INVERSE,
    QUOTIENT,
    FermatSpec,
    PatternTable,
    a_number_bruteforce,
    build_spec,
    check_quotient_inclusion,
    eo_from_patterns,
    eo_type,
    fermat_orbits,
    fermat_word_multiset,
    multiplicative_order,
    orbits,
    pattern,
    pattern_table,
    perm_data,
    pipeline_es,
    quotient_inclusion,
    word_multiset,
)

__all__ = [name for name in dir() if not name.startswith("_")]
