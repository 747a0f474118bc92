"""
Spectra of Finite Power Set Rings

Spec P(X) for a finite universe: the maximal ideals are found by the generic ideal
enumeration on (Z/2)^X, each is identified with the principal ideal P(X - {x}), and the
Zariski topology is materialized. A second, independent search over all families of subsets
serves as an oracle for small universes. Maximal ideals correspond to ultrafilters by taking
complements.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from compactlab.boolring.finsubset import FinSubset, element_to_subset, power_set_ring
from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError
from compactlab.spectrum.enumeration import SpecSite, max_ideals
from compactlab.spectrum.topology import FiniteTopology, basic_open, is_discrete, zariski_topology
from compactlab.stone.points import ExplicitMaxIdeal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteBooleanSpectrum:
    """
    Spec P(X) with its points listed in the order of the x they are principal at.

    Args:
        universe_size: |X|
        points: points[x] is m_x = P(X - {x})
        site: The same points as prime ideals of (Z/2)^X
        topology: Zariski topology on the points
    """

    universe_size: int
    points: tuple[ExplicitMaxIdeal, ...]
    site: SpecSite = field(repr=False)
    topology: FiniteTopology

    @property
    def is_discrete(self) -> bool:
        return is_discrete(self.topology)


def principal_members(size: int, x: int) -> frozenset[int]:
    """Bit vectors of the subsets missing x."""
    return frozenset(bits for bits in range(1 << size) if not (bits >> x) & 1)


def spec_finite_boolean(size: int) -> FiniteBooleanSpectrum:
    """
    Compute Spec P(X) for |X| = size.

    Raises:
        CapacityError: size exceeds BOOLEAN_UNIVERSE_CAP
        ConsistencyError: Some maximal ideal is not principal
    """
    if size > settings.BOOLEAN_UNIVERSE_CAP:
        raise CapacityError("power set universe size", settings.BOOLEAN_UNIVERSE_CAP, size)
    ring = power_set_ring(size)
    site = max_ideals(ring)

    principal_at: dict[int, int] = {}
    explicit: dict[int, ExplicitMaxIdeal] = {}
    for index, ideal in enumerate(site.points):
        members = frozenset(element_to_subset(ring, a).bits for a in ideal.members)
        matches = [x for x in range(size) if principal_members(size, x) == members]
        if len(matches) != 1:
            raise ConsistencyError(f"Maximal ideal with {len(members)} members is not principal")
        principal_at[matches[0]] = index
        explicit[matches[0]] = ExplicitMaxIdeal(size, members)
    if sorted(principal_at) != list(range(size)):
        raise ConsistencyError(f"Expected {size} maximal ideals, found {len(principal_at)}")

    ordered = site.reordered([principal_at[x] for x in range(size)])
    logger.debug(f"Spec P(X) for |X|={size}: {len(ordered)} points")
    return FiniteBooleanSpectrum(
        size, tuple(explicit[x] for x in range(size)), ordered, zariski_topology(ordered)
    )


def _operation_tables(size: int) -> tuple[np.ndarray, np.ndarray]:
    bits = np.arange(1 << size, dtype=np.int64)
    return bits[:, None] ^ bits[None, :], bits[:, None] & bits[None, :]


def brute_force_maximal_ideals(size: int) -> list[frozenset[int]]:
    """
    Maximal ideals of P(X) by searching every family of subsets.

    Raises:
        CapacityError: size exceeds BRUTE_FORCE_UNIVERSE_CAP
    """
    if size > settings.BRUTE_FORCE_UNIVERSE_CAP:
        raise CapacityError("brute-force universe size", settings.BRUTE_FORCE_UNIVERSE_CAP, size)
    count = 1 << size
    full = count - 1
    sums, products = _operation_tables(size)
    proper: list[frozenset[int]] = []
    for family_bits in range(1 << count):
        flags = np.array([(family_bits >> s) & 1 for s in range(count)], dtype=bool)
        if not flags[0] or flags[full]:
            continue
        members = np.flatnonzero(flags)
        if not flags[sums[np.ix_(members, members)]].all():
            continue
        if not flags[products[members]].all():
            continue
        proper.append(frozenset(int(m) for m in members))
    return sorted(
        (ideal for ideal in proper if not any(ideal < other for other in proper)),
        key=lambda ideal: sorted(ideal),
    )


@dataclass(frozen=True)
class UltrafilterView:
    """
    The complement family of a maximal ideal of P(X).

    Raises:
        ValueError: The family is not an ultrafilter
    """

    universe_size: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        full = (1 << self.universe_size) - 1
        for a in self.members:
            if any((a | b) not in self.members for b in range(full + 1)):
                raise ValueError("Family is not upward closed")
            if any((a & b) not in self.members for b in self.members):
                raise ValueError("Family is not closed under intersection")
        for a in range(full + 1):
            if (a in self.members) == ((full & ~a) in self.members):
                raise ValueError(f"Family must contain exactly one of {a:b} and its complement")

    def contains(self, s: FinSubset) -> bool:
        return s.bits in self.members

    def principal_at(self) -> int | None:
        for x in range(self.universe_size):
            if (1 << x) in self.members:
                return x
        return None


def _is_maximal(point: ExplicitMaxIdeal) -> bool:
    full = (1 << point.universe_size) - 1
    members = point.members
    if 0 not in members or full in members:
        return False
    for a in members:
        if any((a ^ b) not in members for b in members):
            return False
        if any((a & b) not in members for b in range(full + 1)):
            return False
    return all((a in members) != ((full & ~a) in members) for a in range(full + 1))


def ultrafilter_view(point: ExplicitMaxIdeal) -> UltrafilterView:
    """
    P(X) - M for a maximal ideal M.

    Raises:
        ValueError: ``point`` is not a maximal ideal
    """
    if not _is_maximal(point):
        raise ValueError("Only maximal ideals correspond to ultrafilters")
    everything = frozenset(range(1 << point.universe_size))
    return UltrafilterView(point.universe_size, everything - point.members)


def ideal_from_ultrafilter(view: UltrafilterView) -> ExplicitMaxIdeal:
    everything = frozenset(range(1 << view.universe_size))
    return ExplicitMaxIdeal(view.universe_size, everything - view.members)


def basic_opens_correspond(spectrum: FiniteBooleanSpectrum) -> bool:
    """
    D(A) = {M : A not in M} and d(A) = {F : A in F} select the same points, for every A.
    """
    ring = power_set_ring(spectrum.universe_size)
    views = [ultrafilter_view(point) for point in spectrum.points]
    for a in range(ring.order):
        subset = element_to_subset(ring, a)
        zariski = basic_open(spectrum.site, a)
        filters = sum(1 << i for i, view in enumerate(views) if view.contains(subset))
        if zariski != filters:
            return False
    return True


def all_principal_ultrafilters(size: int) -> bool:
    """Every ultrafilter of P(X) is principal and each x occurs exactly once."""
    spectrum = spec_finite_boolean(size)
    centers = [ultrafilter_view(point).principal_at() for point in spectrum.points]
    return centers == list(range(size))

