"""
Configuration package for compactlab.
"""

from compactlab.config.settings import (
    ENUMERATION_RING_CAP,
    PRODUCT_RING_CAP,
    SPACE_POINT_CAP,
    SUITE_CONFIG,
    TABLE_RING_CAP,
    get_suite_config,
    validate_config,
)

__all__ = [
    "PRODUCT_RING_CAP",
    "TABLE_RING_CAP",
    "ENUMERATION_RING_CAP",
    "SPACE_POINT_CAP",
    "SUITE_CONFIG",
    "validate_config",
    "get_suite_config",
]
