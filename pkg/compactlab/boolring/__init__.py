"""
Boolean Ring Package

Boolean rings of sets:
- FinSubset and the power set ring P(X) of a finite universe
- UPSet, the decidable algebra of ultimately periodic subsets of N
- BoolRing: full finite, finite/cofinite, and finitely generated subrings of P(N)
"""

from compactlab.boolring.finsubset import (
    FinSubset,
    all_subsets,
    characteristic_isomorphism_holds,
    element_to_subset,
    power_set_ring,
    subset_to_element,
    union_and_downward_closed,
)
from compactlab.boolring.rings import (
    AtomDecomposition,
    BoolRing,
    RingKind,
    atom_decompose,
    membership_in_ring,
    same_ring,
)
from compactlab.boolring.upset import (
    UPSet,
    agrees_with_oracle,
    canonicalize,
    oracle_horizon,
    parse_upset,
    upset_from_dict,
)

__all__ = [
    "FinSubset",
    "all_subsets",
    "power_set_ring",
    "subset_to_element",
    "element_to_subset",
    "characteristic_isomorphism_holds",
    "union_and_downward_closed",
    "UPSet",
    "canonicalize",
    "oracle_horizon",
    "agrees_with_oracle",
    "parse_upset",
    "upset_from_dict",
    "RingKind",
    "BoolRing",
    "AtomDecomposition",
    "atom_decompose",
    "membership_in_ring",
    "same_ring",
]
