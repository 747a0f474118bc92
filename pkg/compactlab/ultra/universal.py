"""
Universal Property of the Finite Stone-Cech Compactification

For a map phi: X -> Y into a finite discrete space, the extension to Min(Lambda) (or Max(Gamma))
is built pointwise: the image of a point p is the single element of the intersection of
phi(Su(f)) (or phi(Omega(f))) over all f outside p. The extension must satisfy
phi = extension o eta, and it must be the only continuous map from the site to Y that does.
"""

import itertools
import logging
from dataclasses import dataclass

from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError
from compactlab.rings.base import FiniteRing
from compactlab.rings.product import ProductRing
from compactlab.spectrum.enumeration import SpecSite, max_ideals, min_primes
from compactlab.spectrum.topology import FiniteTopology, zariski_topology
from compactlab.ultra.ideals import UltraKind, principal_maximals, ultra_ideal
from compactlab.ultra.support import support_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorizationWitness:
    """
    Args:
        mapping: phi, as images of the labels 0..n-1
        extension: The constructed map on site points
        factors: phi == extension o eta
        continuous_extensions: How many continuous maps site -> Y are compatible with eta
    """

    mapping: tuple[int, ...]
    extension: tuple[int, ...]
    factors: bool
    continuous_extensions: int

    @property
    def unique(self) -> bool:
        return self.factors and self.continuous_extensions == 1


def _check_caps(size: int, target_size: int) -> None:
    limit = settings.UNIVERSAL_CHECK_CAP
    if size > limit:
        raise CapacityError("universal check source size", limit, size)
    if target_size > limit:
        raise CapacityError("universal check target size", limit, target_size)


@dataclass(frozen=True)
class _Setup:
    """The site, eta, and for each site point the support masks of the f outside it."""

    site: SpecSite
    eta: tuple[int, ...]
    outside: tuple[frozenset[int], ...]
    topology: FiniteTopology


def _setup(ring: FiniteRing, kind: UltraKind) -> _Setup:
    if not isinstance(ring, ProductRing):
        raise TypeError(f"Need a product ring, got {type(ring).__name__}")
    size = len(ring.labels)
    site = min_primes(ring) if kind is UltraKind.STAR else max_ideals(ring)
    eta = tuple(
        site.index_of(ultra_ideal(point, ring, kind).ideal) for point in principal_maximals(size)
    )
    su, omega = support_bits(ring)
    bits = su if kind is UltraKind.STAR else omega
    outside = tuple(frozenset(int(b) for b in bits[~point.flags]) for point in site.points)
    return _Setup(site, eta, outside, zariski_topology(site))


def _extension(setup: _Setup, mapping: tuple[int, ...]) -> tuple[int, ...]:
    extension = []
    for i, masks in enumerate(setup.outside):
        candidates = set(mapping)
        for mask in masks:
            candidates &= {y for x, y in enumerate(mapping) if (mask >> x) & 1}
        if len(candidates) != 1:
            raise ConsistencyError(
                f"Extension recipe gives {len(candidates)} candidates at site point {i}"
            )
        extension.append(candidates.pop())
    return tuple(extension)


def _continuous(topology: FiniteTopology, images: tuple[int, ...], target_size: int) -> bool:
    for y in range(target_size):
        fiber = sum(1 << i for i, image in enumerate(images) if image == y)
        if not topology.is_open(fiber):
            return False
    return True


def _check(setup: _Setup, target_size: int, mapping: tuple[int, ...]) -> FactorizationWitness:
    if len(mapping) != len(setup.eta) or any(not 0 <= y < target_size for y in mapping):
        raise ValueError(
            f"Map {mapping} is not a function from {len(setup.eta)} to {target_size} points"
        )
    extension = _extension(setup, mapping)
    factors = all(extension[setup.eta[x]] == y for x, y in enumerate(mapping))
    compatible = 0
    for images in itertools.product(range(target_size), repeat=len(setup.site)):
        if all(images[setup.eta[x]] == y for x, y in enumerate(mapping)) and _continuous(
            setup.topology, images, target_size
        ):
            compatible += 1
    return FactorizationWitness(mapping, extension, factors, compatible)


def stone_cech_universal_check(
    ring: FiniteRing,
    target_size: int,
    mapping: tuple[int, ...] | list[int],
    kind: UltraKind | str = UltraKind.STAR,
) -> FactorizationWitness:
    """
    Extend ``mapping`` from X to Min(ring) (star) or Max(ring) (flat) and check uniqueness by
    exhausting every map from the site to Y.

    Args:
        ring: Product ring over X; fields for star, local rings for flat
        target_size: Number of points of the discrete target Y
        mapping: mapping[x] in range(target_size)

    Raises:
        CapacityError: |X| or |Y| exceeds UNIVERSAL_CHECK_CAP
        ConsistencyError: The pointwise recipe does not single out one image
    """
    mapping = tuple(mapping)
    _check_caps(len(mapping), target_size)
    witness = _check(_setup(ring, UltraKind(kind)), target_size, mapping)
    logger.debug(
        f"{kind} extension of {mapping}: {witness.extension}, "
        f"{witness.continuous_extensions} compatible continuous maps"
    )
    return witness


def all_maps_factor(
    ring: FiniteRing, target_size: int, kind: UltraKind | str = UltraKind.STAR
) -> list[FactorizationWitness]:
    """The universal check for every map X -> Y, X being the label set of ``ring``."""
    setup = _setup(ring, UltraKind(kind))
    size = len(setup.eta)
    _check_caps(size, target_size)
    return [
        _check(setup, target_size, mapping)
        for mapping in itertools.product(range(target_size), repeat=size)
    ]
