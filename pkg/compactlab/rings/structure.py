"""
Ring Structure

Units, idempotents, radicals, annihilators and the classification predicates (field, domain,
local, reduced, absolutely flat) of finite rings. Everything here is a brute-force scan over
rows of the Cayley tables.
"""

import numpy as np

from compactlab.errors import ConsistencyError
from compactlab.rings.base import FiniteRing, mask_from_bools
from compactlab.rings.ideals import Ideal, ideal_generate
from compactlab.rings.product import ProductRing


def units(ring: FiniteRing) -> frozenset[int]:
    return frozenset(int(a) for a in np.flatnonzero(ring.unit_mask))


def idempotents(ring: FiniteRing) -> list[int]:
    return [int(a) for a in np.flatnonzero(ring.idempotent_mask)]


def nilradical(ring: FiniteRing) -> Ideal:
    """All nilpotent elements."""
    return Ideal.from_flags(ring, ring.nilpotent_mask)


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """
    Jacobson radical by the unit criterion: f is in it iff 1 + fg is a unit for every g.

    The intersection of the maximal ideals is computed independently in
    ``compactlab.spectrum.jacobson_from_maximals``.
    """
    flags = np.zeros(ring.order, dtype=bool)
    for f in range(ring.order):
        shifted = ring.add_many(ring.one, ring.mul_row(f))
        flags[f] = bool(ring.unit_mask[shifted].all())
    return Ideal.from_flags(ring, flags)


def annihilator(ring: FiniteRing, f: int) -> Ideal:
    """
    Ann(f) = {g : fg = 0}.

    In a product of domains the annihilator is generated by the idempotent supported off the
    support of f; that idempotent is used as the generator witness there.
    """
    flags = ring.mul_row(f) == ring.zero
    if isinstance(ring, ProductRing) and all(is_domain(factor) for factor in ring.factors):
        e = annihilator_idempotent(ring, f)
        return Ideal(ring, mask_from_bools(flags), (e,))
    return Ideal.from_flags(ring, flags)


def annihilator_idempotent(ring: ProductRing, f: int) -> int:
    """
    The idempotent e with e_x = 1 exactly where f_x = 0, verified to generate Ann(f).

    Raises:
        ValueError: Some factor is not a domain
        ConsistencyError: The idempotent does not generate the annihilator
    """
    if not all(is_domain(factor) for factor in ring.factors):
        raise ValueError("Annihilator idempotents need every factor to be a domain")
    comps = ring.components(f)
    e = ring.encode(
        [
            factor.one if c == factor.zero else factor.zero
            for factor, c in zip(ring.factors, comps)
        ]
    )
    expected = mask_from_bools(ring.mul_row(f) == ring.zero)
    if ideal_generate(ring, [e]).mask != expected:
        raise ConsistencyError(f"Idempotent {ring.element_label(e)} does not generate Ann(f)")
    return e


def is_field(ring: FiniteRing) -> bool:
    if ring.is_zero_ring:
        return False
    nonzero = np.arange(ring.order) != ring.zero
    return bool(ring.unit_mask[nonzero].all())


def is_domain(ring: FiniteRing) -> bool:
    if ring.is_zero_ring:
        return False
    nonzero = np.flatnonzero(np.arange(ring.order) != ring.zero)
    for a in nonzero:
        if (ring.mul_many(int(a), nonzero) == ring.zero).any():
            return False
    return True


def is_local(ring: FiniteRing) -> bool:
    """Exactly one maximal ideal: the non-units are closed under addition."""
    if ring.is_zero_ring:
        return False
    nonunits = np.flatnonzero(~ring.unit_mask)
    for a in nonunits:
        if ring.unit_mask[ring.add_many(int(a), nonunits)].any():
            return False
    return True


def is_reduced(ring: FiniteRing) -> bool:
    return int(ring.nilpotent_mask.sum()) == 1


def is_absolutely_flat(ring: FiniteRing) -> bool:
    """Every f has some g with f = f^2 g."""
    for f in range(ring.order):
        square = ring.mul(f, f)
        if not (ring.mul_row(square) == f).any():
            return False
    return True


def is_absolutely_flat_mod_jacobson(ring: FiniteRing) -> bool:
    """
    True iff for every f there is g with f - f^2 g in the Jacobson radical.

    Equivalent to R/J being absolutely flat, without forming the quotient.
    """
    radical = jacobson_radical(ring).flags
    for f in range(ring.order):
        square = ring.mul(f, f)
        differences = ring.sub_many(f, ring.mul_row(square))
        if not radical[differences].any():
            return False
    return True


def regular_witness(ring: ProductRing, f: int) -> int:
    """
    For a product of fields, g with g_x = f_x^-1 where f_x != 0 and g_x = 1 elsewhere.

    Then f(1 - fg) = 0, which makes every prime of the product maximal.
    """
    if not all(is_field(factor) for factor in ring.factors):
        raise ValueError("Regular witnesses need every factor to be a field")
    comps = []
    for factor, c in zip(ring.factors, ring.components(f)):
        if c == factor.zero:
            comps.append(factor.one)
        else:
            comps.append(int(np.flatnonzero(factor.mul_row(c) == factor.one)[0]))
    return ring.encode(comps)
