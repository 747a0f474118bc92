"""
Homeomorphisms from Spec P(X)

M -> M* carries Spec P(X) onto Min of a product of fields, and M -> M-flat carries it onto Max
of a product of local rings. Both point maps are materialized between explicit topologies and
checked to be bijective, continuous and open, to send m_x to the ideal at x, and to pull basic
opens back by the formulas D(f) -> D(Su(f)) and D(f) -> D(Omega(f)).
"""

import logging
from dataclasses import dataclass, field

from compactlab.rings.base import FiniteRing
from compactlab.rings.product import ProductRing
from compactlab.rings.structure import is_field
from compactlab.spectrum.enumeration import SpecSite, max_ideals, min_primes
from compactlab.spectrum.topology import FiniteTopology, basic_open, zariski_topology
from compactlab.stone.finite import spec_finite_boolean
from compactlab.ultra.ideals import (
    factor_maximal_ideal,
    ideal_flat,
    ideal_star,
    principal_maximals,
    projection_map,
)
from compactlab.ultra.support import support_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointMap:
    """
    A map between finite topological spaces, given on point indices.

    Args:
        images: images[i] is the image of source point i
        source: Source topology
        target: Target topology
    """

    images: tuple[int, ...]
    source: FiniteTopology
    target: FiniteTopology

    def image_of(self, mask: int) -> int:
        result = 0
        for i, j in enumerate(self.images):
            if (mask >> i) & 1:
                result |= 1 << j
        return result

    def preimage_of(self, mask: int) -> int:
        result = 0
        for i, j in enumerate(self.images):
            if (mask >> j) & 1:
                result |= 1 << i
        return result

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and sorted(self.images) == list(
            range(self.target.size)
        )

    def is_continuous(self) -> bool:
        return all(self.source.is_open(self.preimage_of(v)) for v in self.target.opens)

    def is_open_map(self) -> bool:
        return all(self.target.is_open(self.image_of(u)) for u in self.source.opens)

    def is_homeomorphism(self) -> bool:
        return self.is_bijective() and self.is_continuous() and self.is_open_map()

    def inverse(self) -> "PointMap":
        if not self.is_bijective():
            raise ValueError("Only bijections have inverses")
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return PointMap(tuple(images), self.target, self.source)

    def then(self, after: "PointMap") -> "PointMap":
        return PointMap(tuple(after.images[j] for j in self.images), self.source, after.target)


@dataclass(frozen=True)
class SpecHomeomorphism:
    """
    Args:
        point_map: Spec P(X) -> site, point x of Spec P(X) being m_x
        site: Min of a product of fields, or Max of a product of local rings
        eta: eta[x] is the index of the ideal at x (kernel or preimage of the maximal ideal
            of R_x), computed from the projections independently of the map
        eta_compatible: point_map sends m_x to eta[x] for every x
        basic_open_formula: The basic-open pullback formula holds for every f
    """

    point_map: PointMap
    site: SpecSite = field(repr=False)
    eta: tuple[int, ...]
    eta_compatible: bool
    basic_open_formula: bool

    @property
    def holds(self) -> bool:
        return self.point_map.is_homeomorphism() and self.eta_compatible and self.basic_open_formula


def _require_product(ring: FiniteRing, size: int) -> ProductRing:
    if not isinstance(ring, ProductRing):
        raise TypeError(f"Need a product ring, got {type(ring).__name__}")
    if len(ring.labels) != size:
        raise ValueError(f"Ring has {len(ring.labels)} labels, expected {size}")
    return ring


def _homeomorphism(ring: ProductRing, size: int, star: bool) -> SpecHomeomorphism:
    spectrum = spec_finite_boolean(size)
    site = min_primes(ring) if star else max_ideals(ring)
    make = ideal_star if star else ideal_flat
    images = tuple(site.index_of(make(point, ring).ideal) for point in principal_maximals(size))
    point_map = PointMap(images, spectrum.topology, zariski_topology(site))

    eta = []
    for x in range(size):
        pi = projection_map(ring, x)
        ideal = pi.kernel() if star else pi.preimage(factor_maximal_ideal(pi.target))
        eta.append(site.index_of(ideal))
    eta_compatible = tuple(eta) == images

    su, omega = support_bits(ring)
    bits = su if star else omega
    formula = all(
        point_map.preimage_of(basic_open(site, f)) == int(bits[f]) for f in range(ring.order)
    )
    return SpecHomeomorphism(point_map, site, tuple(eta), eta_compatible, formula)


def star_homeomorphism(size: int, ring: FiniteRing) -> SpecHomeomorphism:
    """
    M -> M*: Spec P(X) -> Min of a product of fields over X.

    Raises:
        ValueError: Some factor is not a field, or the label count is not ``size``
    """
    product = _require_product(ring, size)
    if not all(is_field(factor) for factor in product.factors):
        raise ValueError("M -> M* needs a product of fields")
    result = _homeomorphism(product, size, star=True)
    logger.debug(f"Star map on {size} points: homeomorphism={result.holds}")
    return result


def flat_homeomorphism(size: int, ring: FiniteRing) -> SpecHomeomorphism:
    """
    M -> M-flat: Spec P(X) -> Max of a product of local rings over X.

    Raises:
        ValueError: Some factor is not local, or the label count is not ``size``
    """
    product = _require_product(ring, size)
    result = _homeomorphism(product, size, star=False)
    logger.debug(f"Flat map on {size} points: homeomorphism={result.holds}")
    return result


def composite_sends_kernels_to_maximals(
    star: SpecHomeomorphism, flat: SpecHomeomorphism
) -> bool:
    """The composite Min -> Spec P(X) -> Max is a homeomorphism sending p_x to M_x."""
    composite = star.point_map.inverse().then(flat.point_map)
    return composite.is_homeomorphism() and all(
        composite.images[star.eta[x]] == flat.eta[x] for x in range(len(star.eta))
    )


def delta_isolates(ring: FiniteRing, site: SpecSite, eta: tuple[int, ...]) -> bool:
    """{ideal at x} = site & D(Delta_x) for every x."""
    product = _require_product(ring, len(eta))
    return all(
        basic_open(site, product.delta(label)) == 1 << eta[x]
        for x, label in enumerate(product.labels)
    )
