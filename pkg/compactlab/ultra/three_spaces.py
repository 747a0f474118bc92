"""
Three Spaces over the Primes of a Ring

From the primes p of a finite ring R three product rings are built over the label set
{p0, p1, ...}: the product of the domains R/p, the product of the residue fields k(p), and
the product of the localizations R_p. Min of the first, Spec of the second and Max of the
third are all identified with Spec P(X) through the label-wise ideals, so the composite
label-wise maps between them must be homeomorphisms.
"""

import logging
from dataclasses import dataclass

from compactlab.rings.base import FiniteRing
from compactlab.rings.constructions import localize_at_prime, quotient
from compactlab.rings.ideals import Ideal
from compactlab.rings.product import product_of_rings
from compactlab.spectrum.enumeration import SpecSite, enumerate_primes, max_ideals, min_primes
from compactlab.spectrum.topology import zariski_topology
from compactlab.ultra.homeomorphisms import PointMap
from compactlab.ultra.ideals import factor_maximal_ideal, ideal_flat, ideal_star, principal_maximals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThreeSpacesWitness:
    """
    Args:
        prime_count: |Spec R|
        min_count: |Min(prod R/p)|
        spec_count: |Spec(prod k(p))|
        max_count: |Max(prod R_p)|
        homeomorphic: Both label-wise maps are homeomorphisms
    """

    prime_count: int
    min_count: int
    spec_count: int
    max_count: int
    homeomorphic: bool

    def to_dict(self) -> dict[str, int | bool]:
        return {
            "primes": self.prime_count,
            "min": self.min_count,
            "spec": self.spec_count,
            "max": self.max_count,
            "homeomorphic": self.homeomorphic,
        }


def residue_field(ring: FiniteRing, prime: Ideal) -> FiniteRing:
    """k(p) = R_p / (non-units of R_p)."""
    local = localize_at_prime(ring, prime).ring
    return quotient(local, factor_maximal_ideal(local)).target


def _labelwise(
    source: SpecSite, source_index: list[int], target: SpecSite, target_index: list[int]
) -> PointMap | None:
    """The map sending the source point at label x to the target point at label x."""
    if len(source) != len(source_index) or len(target) != len(target_index):
        return None
    images = [0] * len(source)
    for s, t in zip(source_index, target_index):
        images[s] = t
    return PointMap(tuple(images), zariski_topology(source), zariski_topology(target))


def three_spaces(ring: FiniteRing) -> ThreeSpacesWitness:
    """
    Build the three products and compare their spaces.

    Raises:
        ValueError: The ring is the zero ring
    """
    primes = enumerate_primes(ring).points
    if not primes:
        raise ValueError("The zero ring has no primes")
    labels = [f"p{i}" for i in range(len(primes))]
    domains = product_of_rings([quotient(ring, p).target for p in primes], labels)
    residues = product_of_rings([residue_field(ring, p) for p in primes], labels)
    localizations = product_of_rings(
        [localize_at_prime(ring, p).ring for p in primes], labels
    )

    min_site = min_primes(domains)
    spec_site = enumerate_primes(residues)
    max_site = max_ideals(localizations)
    points = principal_maximals(len(primes))
    at_min = [min_site.index_of(ideal_star(m, domains).ideal) for m in points]
    at_spec = [spec_site.index_of(ideal_star(m, residues).ideal) for m in points]
    at_max = [max_site.index_of(ideal_flat(m, localizations).ideal) for m in points]

    first = _labelwise(min_site, at_min, spec_site, at_spec)
    second = _labelwise(spec_site, at_spec, max_site, at_max)
    homeomorphic = (
        first is not None
        and second is not None
        and first.is_homeomorphism()
        and second.is_homeomorphism()
        and first.then(second).is_homeomorphism()
    )
    logger.debug(
        f"Three spaces over {len(primes)} primes: "
        f"{len(min_site)}/{len(spec_site)}/{len(max_site)} points, homeomorphic={homeomorphic}"
    )
    return ThreeSpacesWitness(
        len(primes), len(min_site), len(spec_site), len(max_site), homeomorphic
    )
