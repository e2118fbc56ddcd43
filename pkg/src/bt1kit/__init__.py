"""BT1 group schemes from Kraft words: canonical types, Ekedahl-Oort types and invariants.

The Fermat quotient curves ``y^d = x(1 - x)`` are handled in :mod:`bt1kit.fermat`.
"""

from .canonical import (
    CanonicalType,
    Filtration,
    canonical_filtration_oracle,
    canonical_to_perm,
    dual_canonical,
    gamma_data,
    is_self_dual,
    words_to_canonical,
)
from .eo import ElementarySequence, RunLengthEO, canonical_from_es, es_from_canonical
from .errors import BT1Error
from .invariants import (
    InvariantBundle,
    a_number,
    hom_dim_to_M11,
    invariants,
    invariants_from_es,
    invariants_from_multiplicities,
    p_rank,
    s11,
    u11,
)
from .kraft import KraftModule, build_kraft, generators_relations
from .permdata import PartitionedPermutation, is_admissible, perm_to_words, words_to_perm
from .words import CyclicWord, WordMultiset, format_multiset, parse_multiset

__version__ = "0.1.0"
