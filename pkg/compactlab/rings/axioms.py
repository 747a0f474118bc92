"""
Ring Axiom Checks

Exhaustive verification of the commutative ring axioms. Rings up to the table cap are checked
over all pairs and triples; larger products are checked factor by factor, since the product
operations are componentwise.
"""

import numpy as np

from compactlab.config import settings
from compactlab.rings.base import FiniteRing
from compactlab.rings.product import ProductRing


def check_ring_axioms(ring: FiniteRing) -> list[str]:
    """
    List every violated ring law; an empty list means the ring is a commutative ring with one.

    Args:
        ring: Ring to check

    Returns:
        Names of violated laws
    """
    if isinstance(ring, ProductRing) and ring.order > settings.TABLE_RING_CAP:
        violations: list[str] = []
        for label, factor in zip(ring.labels, ring.factors):
            violations.extend(f"{law} (factor {label})" for law in check_ring_axioms(factor))
        return violations

    n = ring.order
    idx = np.arange(n)
    add, mul = ring.full_tables()
    violations = []

    if not (add == add.T).all():
        violations.append("additive commutativity")
    if not (mul == mul.T).all():
        violations.append("multiplicative commutativity")
    if not (add[ring.zero] == idx).all():
        violations.append("additive identity")
    if not (mul[ring.one] == idx).all():
        violations.append("multiplicative identity")
    if not (add == ring.zero).any(axis=1).all():
        violations.append("additive inverses")

    add_assoc = mul_assoc = distributive = True
    for a in range(n):
        # rows are (b, c) grids for fixed a
        if not (add[add[a][:, None], idx[None, :]] == add[a][add]).all():
            add_assoc = False
        if not (mul[mul[a][:, None], idx[None, :]] == mul[a][mul]).all():
            mul_assoc = False
        if not (mul[a][add] == add[mul[a][:, None], mul[a][None, :]]).all():
            distributive = False
    if not add_assoc:
        violations.append("additive associativity")
    if not mul_assoc:
        violations.append("multiplicative associativity")
    if not distributive:
        violations.append("distributivity")
    return violations
