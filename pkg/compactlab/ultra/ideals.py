"""
Ultra Ideals and Ultraproducts

For a maximal ideal M of P(X) and a product R of local rings over X:

    M* = {f : Su(f) in M}        M-flat = {f : Omega(f) in M}

For finite X every M is principal, M = m_x = {A : x not in A}, so M* is the kernel of the
projection to R_x and M-flat is the preimage of the maximal ideal of R_x. The quotients R/M*
and R/M-flat are compared with R_x and its residue field through the canonical maps
f + M* -> f_x and f + M-flat -> f_x + m_x.
"""

import logging
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from compactlab.errors import ConsistencyError
from compactlab.rings.base import FiniteRing, mask_from_bools
from compactlab.rings.constructions import RingMap, quotient
from compactlab.rings.ideals import Ideal, greedy_generators, ideal_generate
from compactlab.rings.product import ProductRing, product_of_rings
from compactlab.rings.structure import is_domain, is_field, is_local
from compactlab.ultra.support import support_bits

logger = logging.getLogger(__name__)


class UltraKind(StrEnum):
    STAR = "star"
    FLAT = "flat"


@dataclass(frozen=True)
class PrincipalMax:
    """
    m_x = {A : x not in A}, a maximal ideal of P({0..n-1}).

    Args:
        universe_size: n
        x: The point the ideal is principal at
    """

    universe_size: int
    x: int

    def __post_init__(self) -> None:
        if not 0 <= self.x < self.universe_size:
            raise ValueError(f"Point {self.x} outside a universe of size {self.universe_size}")

    def contains(self, bits: int) -> bool:
        return not (bits >> self.x) & 1

    def members(self) -> frozenset[int]:
        return frozenset(b for b in range(1 << self.universe_size) if self.contains(b))


def principal_maximals(size: int) -> list[PrincipalMax]:
    return [PrincipalMax(size, x) for x in range(size)]


@dataclass(frozen=True)
class UltraIdeal:
    """
    Args:
        kind: STAR for M*, FLAT for M-flat
        source: The maximal ideal of P(X)
        ideal: Its image ideal in the product ring
    """

    kind: UltraKind
    source: PrincipalMax
    ideal: Ideal


def _require_labels(ring: FiniteRing, point: PrincipalMax) -> ProductRing:
    if not isinstance(ring, ProductRing):
        raise TypeError(f"Ultra ideals need a product ring, got {type(ring).__name__}")
    if len(ring.labels) != point.universe_size:
        raise ValueError(
            f"Ring has {len(ring.labels)} labels but M lives on {point.universe_size} points"
        )
    return ring


def projection_map(ring: ProductRing, x: int) -> RingMap:
    """pi_x: R -> R_x."""
    column = ring.component_matrix[:, x]
    return RingMap(ring, ring.factors[x], tuple(int(c) for c in column))


def factor_maximal_ideal(factor: FiniteRing) -> Ideal:
    """The non-units of a local ring."""
    if not is_local(factor):
        raise ValueError("Factor is not a local ring")
    return Ideal.from_flags(factor, ~factor.unit_mask)


def ideal_star(point: PrincipalMax, ring: FiniteRing) -> UltraIdeal:
    """
    M* = {f : Su(f) in M}, with the generator 1 - Delta_x verified.

    Raises:
        ConsistencyError: 1 - Delta_x does not generate M*
    """
    product = _require_labels(ring, point)
    su, _ = support_bits(product)
    flags = ((su >> point.x) & 1) == 0
    label = product.labels[point.x]
    generator = product.sub(product.one, product.delta(label))
    mask = mask_from_bools(flags)
    if ideal_generate(product, [generator]).mask != mask:
        raise ConsistencyError(f"1 - Delta_{label} does not generate M*")
    return UltraIdeal(UltraKind.STAR, point, Ideal(product, mask, (generator,)))


def ideal_flat(point: PrincipalMax, ring: FiniteRing) -> UltraIdeal:
    """
    M-flat = {f : Omega(f) in M}, generated by 1 - Delta_x and the maximal ideal of R_x
    placed at x.

    Raises:
        ValueError: Some factor is not local
        ConsistencyError: The generators do not generate M-flat
    """
    product = _require_labels(ring, point)
    _, omega = support_bits(product)
    flags = ((omega >> point.x) & 1) == 0
    label = product.labels[point.x]
    factor = product.factors[point.x]
    local_generators = greedy_generators(factor, ~factor.unit_mask)
    generators = (
        product.sub(product.one, product.delta(label)),
        *(product.embed(label, g) for g in local_generators),
    )
    mask = mask_from_bools(flags)
    if ideal_generate(product, generators).mask != mask:
        raise ConsistencyError(f"Generators of M-flat at {label} do not generate it")
    return UltraIdeal(UltraKind.FLAT, point, Ideal(product, mask, generators))


def ultra_ideal(point: PrincipalMax, ring: FiniteRing, kind: UltraKind | str) -> UltraIdeal:
    if UltraKind(kind) is UltraKind.STAR:
        return ideal_star(point, ring)
    return ideal_flat(point, ring)


def _induced_map(projection: RingMap, direct: RingMap) -> RingMap:
    """
    The map on R/I sending f + I to direct(f); checked to be well defined.

    Raises:
        ConsistencyError: ``direct`` is not constant on some coset
    """
    quotient_ring = projection.target
    images = np.full(quotient_ring.order, -1, dtype=np.int64)
    for f, coset in enumerate(projection.images):
        value = direct.images[f]
        if images[coset] < 0:
            images[coset] = value
        elif images[coset] != value:
            raise ConsistencyError("Comparison map is not constant on a coset")
    return RingMap(quotient_ring, direct.target, tuple(int(v) for v in images))


@dataclass(frozen=True)
class Ultraproduct:
    """
    R/I for an ultra ideal I, with the projection and the canonical comparison map.

    Args:
        ultra: The ideal divided out
        projection: R -> R/I
        comparison: R/I -> R_x (star) or R/I -> R_x/m_x (flat); an isomorphism
    """

    ultra: UltraIdeal
    projection: RingMap = field(repr=False)
    comparison: RingMap = field(repr=False)

    @property
    def ring(self) -> FiniteRing:
        return self.projection.target

    def classify(self) -> dict[str, bool]:
        return {
            "field": is_field(self.ring),
            "domain": is_domain(self.ring),
            "local": is_local(self.ring),
        }


def ultraproduct(
    point: PrincipalMax, ring: FiniteRing, kind: UltraKind | str = UltraKind.STAR
) -> Ultraproduct:
    """
    R/M* (or R/M-flat) with its canonical comparison to R_x (or the residue field of R_x).

    Raises:
        ConsistencyError: The comparison map is not a ring isomorphism
    """
    ultra = ultra_ideal(point, ring, kind)
    product = _require_labels(ring, point)
    projection = quotient(product, ultra.ideal)
    to_factor = projection_map(product, point.x)
    if ultra.kind is UltraKind.FLAT:
        residue = quotient(to_factor.target, factor_maximal_ideal(to_factor.target))
        to_factor = to_factor.compose(residue)
    comparison = _induced_map(projection, to_factor)
    if not (comparison.is_bijective() and comparison.is_ring_homomorphism()):
        raise ConsistencyError(
            f"Comparison map for {ultra.kind} at x={point.x} is not an isomorphism"
        )
    logger.debug(
        f"Ultraproduct {ultra.kind} at x={point.x}: "
        f"order {projection.target.order} from {product.order}"
    )
    return Ultraproduct(ultra, projection, comparison)


def residue_field_comparison(point: PrincipalMax, ring: FiniteRing) -> RingMap:
    """
    Gamma/M-flat -> (prod K_x)/M*, f + M-flat -> (reduction of f) + M*, where K_x is the
    residue field of each factor.

    Raises:
        ConsistencyError: The map is not a ring isomorphism
    """
    product = _require_labels(ring, point)
    reductions = [
        quotient(factor, factor_maximal_ideal(factor)) for factor in product.factors
    ]
    residues = product_of_rings([r.target for r in reductions], product.labels)
    reduced = tuple(
        residues.encode([r.images[c] for r, c in zip(reductions, product.components(f))])
        for f in range(product.order)
    )
    reduction = RingMap(product, residues, reduced)
    star = ideal_star(point, residues)
    to_ultra = reduction.compose(quotient(residues, star.ideal))
    flat_projection = quotient(product, ideal_flat(point, product).ideal)
    comparison = _induced_map(flat_projection, to_ultra)
    if not (comparison.is_bijective() and comparison.is_ring_homomorphism()):
        raise ConsistencyError(f"Residue comparison at x={point.x} is not an isomorphism")
    return comparison
