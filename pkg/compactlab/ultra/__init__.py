"""
Ultra Package

Supports and unit loci in product rings, the ultra ideals M* and M-flat with their quotients,
the homeomorphisms from Spec P(X) onto Min and Max, and the universal property of the finite
Stone-Cech compactification.
"""

from compactlab.ultra.homeomorphisms import (
    PointMap,
    SpecHomeomorphism,
    composite_sends_kernels_to_maximals,
    delta_isolates,
    flat_homeomorphism,
    star_homeomorphism,
)
from compactlab.ultra.ideals import (
    PrincipalMax,
    UltraIdeal,
    UltraKind,
    Ultraproduct,
    factor_maximal_ideal,
    ideal_flat,
    ideal_star,
    principal_maximals,
    projection_map,
    residue_field_comparison,
    ultra_ideal,
    ultraproduct,
)
from compactlab.ultra.support import (
    SupportProfile,
    support,
    support_bits,
    support_preimage,
    unit_locus_preimage,
)
from compactlab.ultra.three_spaces import ThreeSpacesWitness, residue_field, three_spaces
from compactlab.ultra.universal import (
    FactorizationWitness,
    all_maps_factor,
    stone_cech_universal_check,
)

__all__ = [
    "SupportProfile",
    "support",
    "support_bits",
    "support_preimage",
    "unit_locus_preimage",
    "UltraKind",
    "PrincipalMax",
    "UltraIdeal",
    "Ultraproduct",
    "principal_maximals",
    "projection_map",
    "factor_maximal_ideal",
    "ideal_star",
    "ideal_flat",
    "ultra_ideal",
    "ultraproduct",
    "residue_field_comparison",
    "PointMap",
    "SpecHomeomorphism",
    "star_homeomorphism",
    "flat_homeomorphism",
    "composite_sends_kernels_to_maximals",
    "delta_isolates",
    "FactorizationWitness",
    "stone_cech_universal_check",
    "all_maps_factor",
    "ThreeSpacesWitness",
    "residue_field",
    "three_spaces",
]
