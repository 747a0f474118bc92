"""
Supports and Unit Loci

For f in a product of local rings indexed by X: Su(f) is the set of labels where f is
non-zero and Omega(f) the set of labels where f is a unit of its factor. Both are FinSubsets
of the label set, bit x standing for the x-th label.
"""

from dataclasses import dataclass

import numpy as np

from compactlab.boolring.finsubset import FinSubset
from compactlab.rings.atoms import AtomRing
from compactlab.rings.base import BoolArray, FiniteRing, IndexArray
from compactlab.rings.product import ProductRing
from compactlab.rings.structure import is_local


@dataclass(frozen=True)
class SupportProfile:
    """
    Args:
        support: Su(f)
        unit_locus: Omega(f), always inside Su(f)
    """

    support: FinSubset
    unit_locus: FinSubset


def _require_product(ring: FiniteRing) -> ProductRing:
    if not isinstance(ring, ProductRing):
        raise TypeError(f"Supports need a product ring, got {type(ring).__name__}")
    return ring


def _factor_units(ring: ProductRing) -> list[BoolArray]:
    masks = []
    for label, factor in zip(ring.labels, ring.factors):
        if isinstance(factor, AtomRing):
            masks.append(np.arange(factor.order) % factor.atom.prime != 0)
            continue
        if not is_local(factor):
            raise ValueError(f"Factor {label} is not a local ring")
        masks.append(factor.unit_mask)
    return masks


def support_bits(ring: FiniteRing) -> tuple[IndexArray, IndexArray]:
    """
    Bit vectors of Su(f) and Omega(f) for every element f, indexed by f.

    Raises:
        TypeError: The ring is not a product
        ValueError: Some factor is not local
    """
    product = _require_product(ring)
    components = product.component_matrix
    weights = np.left_shift(1, np.arange(len(product.factors), dtype=np.int64))
    zeros = np.array([factor.zero for factor in product.factors], dtype=np.int64)
    nonzero = components != zeros[None, :]
    units = np.column_stack(
        [mask[components[:, i]] for i, mask in enumerate(_factor_units(product))]
    )
    return nonzero.astype(np.int64) @ weights, units.astype(np.int64) @ weights


def support(ring: FiniteRing, f: int) -> SupportProfile:
    """
    Su(f) and Omega(f) for an element of a product of local rings.

    Raises:
        TypeError: The ring is not a product
        ValueError: Some factor is not local
    """
    product = _require_product(ring)
    size = len(product.labels)
    units = _factor_units(product)
    su = omega = 0
    for i, (factor, c) in enumerate(zip(product.factors, product.components(f))):
        if c != factor.zero:
            su |= 1 << i
        if units[i][c]:
            omega |= 1 << i
    return SupportProfile(FinSubset(size, su), FinSubset(size, omega))


def support_preimage(ring: FiniteRing, family: set[int]) -> BoolArray:
    """Flags of the f whose support bit vector lies in ``family``."""
    su, _ = support_bits(ring)
    return np.isin(su, np.fromiter(family, dtype=np.int64, count=len(family)))


def unit_locus_preimage(ring: FiniteRing, family: set[int]) -> BoolArray:
    _, omega = support_bits(ring)
    return np.isin(omega, np.fromiter(family, dtype=np.int64, count=len(family)))
