"""
Stone Duality Package

Spectra of Boolean rings of sets and the compactifications they present:
- Spec P(X) for finite X and the ultrafilter dictionary
- Symbolic spectra of finitely generated rings Fin(N) inside R' inside P(N)
- Maximality witnesses, clopen round trips and quasi-compactness certificates
- Ring maps between finite power set rings
"""

from compactlab.stone.compactification import (
    BasicOpen,
    Compactification,
    CoverResult,
    MaximalityWitness,
    alexandroff,
    check_cover,
    clop_of_compactification,
    compactify,
    maximality_witness,
)
from compactlab.stone.finite import (
    FiniteBooleanSpectrum,
    UltrafilterView,
    all_principal_ultrafilters,
    basic_opens_correspond,
    brute_force_maximal_ideals,
    ideal_from_ultrafilter,
    spec_finite_boolean,
    ultrafilter_view,
)
from compactlab.stone.homs import RingMapCount, count_ring_maps
from compactlab.stone.points import (
    ExplicitMaxIdeal,
    InfinityPoint,
    PrincipalPoint,
    StonePoint,
    ideal_law_violations,
)

__all__ = [
    "PrincipalPoint",
    "InfinityPoint",
    "ExplicitMaxIdeal",
    "StonePoint",
    "ideal_law_violations",
    "FiniteBooleanSpectrum",
    "spec_finite_boolean",
    "brute_force_maximal_ideals",
    "UltrafilterView",
    "ultrafilter_view",
    "ideal_from_ultrafilter",
    "basic_opens_correspond",
    "all_principal_ultrafilters",
    "BasicOpen",
    "Compactification",
    "compactify",
    "alexandroff",
    "MaximalityWitness",
    "maximality_witness",
    "clop_of_compactification",
    "CoverResult",
    "check_cover",
    "RingMapCount",
    "count_ring_maps",
]
