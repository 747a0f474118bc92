"""
Configuration for compactlab

This module contains the size caps that keep every exhaustive computation bounded, the
verification defaults used by the CLI, and the registry of verification suites. Caps with an
environment variable can be overridden at process start; CLI flags override both.
"""

import logging
import os
from typing import Any

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}; using {default}")
        return default


# Ring Size Caps
PRODUCT_RING_CAP = _env_int("COMPACTLAB_PRODUCT_RING_CAP", 4096)  # arithmetic on products
TABLE_RING_CAP = _env_int("COMPACTLAB_TABLE_RING_CAP", 256)  # Cayley-table rings
ENUMERATION_RING_CAP = _env_int("COMPACTLAB_MAX_RING", 64)  # corpus sweep order
LOCALIZATION_PAIR_CAP = 65536  # |R|·|S| fraction pairs

# Finite Space Caps
SPACE_POINT_CAP = _env_int("COMPACTLAB_MAX_SPACE", 4)  # labeled topology enumeration
BETA_POINT_CAP = 6
TOPOLOGY_POINT_CAP = 16

# Boolean Ring Caps
BOOLEAN_UNIVERSE_CAP = 5  # Spec of the power set ring
BRUTE_FORCE_UNIVERSE_CAP = 3  # subset search over all 2^(2^n) families
RING_MAP_UNIVERSE_CAP = 3
UNIVERSAL_CHECK_CAP = 4
GENERATOR_CAP = 16
CLOPEN_ATOM_CAP = 12  # infinite atoms searched for clopen sets

# Verification Defaults
DEFAULT_SEED = _env_int("COMPACTLAB_SEED", 0)
LOCALIZATION_SWEEP_ORDER = 24
SAMPLED_NON_MEMBERS = 100
PRESENTED_COVERS = 20

# Verification Suites
SUITE_CONFIG: dict[str, dict[str, Any]] = {
    "ring-axioms": {
        "name": "ring-axioms",
        "description": "Ring laws, absolute flatness of products of fields, radicals",
    },
    "localization-kernel": {
        "name": "localization-kernel",
        "description": "Localization kernels against brute-force nilpotence",
        "max_order": LOCALIZATION_SWEEP_ORDER,
    },
    "minimal-primes": {
        "name": "minimal-primes",
        "description": "Containment-minimal primes against the nilpotent-product criterion",
    },
    "min-max-topologies": {
        "name": "min-max-topologies",
        "description": "Zariski and flat topologies on minimal and maximal spectra",
    },
    "boolean-spectrum": {
        "name": "boolean-spectrum",
        "description": "Spectra of finite power set rings and the ultrafilter dictionary",
    },
    "discrete-stone-cech": {
        "name": "discrete-stone-cech",
        "description": "Universal factorization through minimal and maximal spectra",
    },
    "ultra-homeomorphisms": {
        "name": "ultra-homeomorphisms",
        "description": "Support and unit-locus homeomorphisms onto Min and Max",
    },
    "ultra-rings": {
        "name": "ultra-rings",
        "description": "Quotients by star and flat ultra ideals",
    },
    "three-spaces": {
        "name": "three-spaces",
        "description": "Min of domain products, Spec of residue products, Max of local products",
    },
    "alexandroff": {
        "name": "alexandroff",
        "description": "One-point compactification of the naturals via finite/cofinite sets",
    },
    "totally-disconnected": {
        "name": "totally-disconnected",
        "description": "Clopen round trips of generated subrings and components of finite spaces",
    },
    "finite-space-beta": {
        "name": "finite-space-beta",
        "description": "Stone-Cech quotients, convergence criteria for openness and continuity",
    },
    "ring-map-counts": {
        "name": "ring-map-counts",
        "description": "Ring maps between finite power set rings and sizes of their spectra",
    },
    "periodic-sets": {
        "name": "periodic-sets",
        "description": "Ultimately periodic set algebra against a membership oracle",
    },
}


def validate_config() -> bool:
    """
    Validate that every cap is usable.
    Returns True if valid, False otherwise.
    """
    caps = {
        "PRODUCT_RING_CAP": PRODUCT_RING_CAP,
        "TABLE_RING_CAP": TABLE_RING_CAP,
        "ENUMERATION_RING_CAP": ENUMERATION_RING_CAP,
        "SPACE_POINT_CAP": SPACE_POINT_CAP,
    }
    valid = True
    for name, value in caps.items():
        if value < 1:
            logger.warning(f"{name} must be positive, got {value}")
            valid = False
    if ENUMERATION_RING_CAP > PRODUCT_RING_CAP:
        logger.warning(
            f"ENUMERATION_RING_CAP {ENUMERATION_RING_CAP} exceeds PRODUCT_RING_CAP {PRODUCT_RING_CAP}"
        )
        valid = False
    return valid


def get_suite_config(suite_id: str) -> dict[str, Any]:
    """
    Get configuration for a verification suite.

    Args:
        suite_id: Stable suite id (e.g. "alexandroff")

    Returns:
        Dictionary with suite configuration, empty for unknown ids
    """
    return SUITE_CONFIG.get(suite_id, {})
