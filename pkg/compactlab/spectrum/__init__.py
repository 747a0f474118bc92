"""
Spectrum Package

Prime, minimal and maximal ideals of finite rings, and the Zariski and flat topologies on
them as explicit open families.
"""

from compactlab.spectrum.enumeration import (
    SiteKind,
    SpecSite,
    enumerate_ideals,
    enumerate_primes,
    is_prime,
    jacobson_from_maximals,
    max_ideals,
    min_primes,
    nilradical_from_primes,
    site,
)
from compactlab.spectrum.topology import (
    Comparison,
    FiniteTopology,
    basic_closed,
    basic_open,
    clopens,
    closed_basic_family,
    compare,
    flat_topology,
    is_discrete,
    is_hausdorff,
    is_totally_disconnected,
    point_mask,
    zariski_topology,
)

__all__ = [
    "SiteKind",
    "SpecSite",
    "enumerate_ideals",
    "enumerate_primes",
    "is_prime",
    "min_primes",
    "max_ideals",
    "site",
    "jacobson_from_maximals",
    "nilradical_from_primes",
    "Comparison",
    "FiniteTopology",
    "zariski_topology",
    "flat_topology",
    "basic_open",
    "basic_closed",
    "closed_basic_family",
    "compare",
    "clopens",
    "is_hausdorff",
    "is_totally_disconnected",
    "is_discrete",
    "point_mask",
]
